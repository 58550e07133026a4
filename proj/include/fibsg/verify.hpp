#pragma once

// Cross-validation of the S(a) closed forms against the generic semigroup
// oracle, plus identity checks that stay cheap for large a.

#include "fibsg/family.hpp"
#include "fibsg/fibonacci.hpp"
#include "fibsg/parallel.hpp"
#include "fibsg/semigroup.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace fibsg {

/// The closed forms under test. Swapping one of these out is how the fault
/// injection tests make sure a wrong formula is actually caught.
struct ClosedForms {
  std::function<std::vector<Nat>(std::size_t)> generators = [](std::size_t a) {
    return family_generators(a);
  };
  std::function<AperyTable(std::size_t, std::uint64_t)> apery = [](std::size_t a, std::uint64_t bound) {
    return family_apery(a, bound);
  };
  std::function<Integer(std::size_t)> frobenius = [](std::size_t a) { return family_frobenius(a); };
  std::function<Nat(std::size_t)> genus = [](std::size_t a) { return family_genus(a); };
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // empty on success
};

struct VerifyRecord {
  std::size_t a = 0;
  bool oracle_run = false;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

struct VerifyConfig {
  std::uint64_t oracle_bound = 1'000'000;
  bool parallel = false;
  OracleLimits limits{};
};

struct VerifyReport {
  std::vector<VerifyRecord> records;
  std::size_t oracle_max_a = 0;  // 0 when no oracle run happened

  bool passed() const {
    for (const auto& r : records)
      if (!r.passed()) return false;
    return true;
  }
};

/// Largest a >= 3 with f_a <= bound, or 0 if there is none.
inline std::size_t oracle_reach(std::uint64_t bound) {
  std::size_t a = 0;
  for (std::size_t k = 3; fib(k) <= bound; ++k) a = k;
  return a;
}

namespace detail {

template <typename T>
std::string show(const T& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

template <typename T>
std::string show(const std::vector<T>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ']';
  return out.str();
}

template <typename L, typename R>
CheckResult compare(std::string name, const L& closed, const R& oracle) {
  if (closed == oracle) return {std::move(name), true, {}};
  return {std::move(name), false, "closed form " + show(closed) + " vs oracle " + show(oracle)};
}

inline CheckResult expect(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok, ok ? std::string{} : std::move(detail)};
}

}  // namespace detail

inline VerifyRecord verify_parameter(std::size_t a, const VerifyConfig& cfg,
                                     const ClosedForms& forms = {}) {
  using detail::compare;
  using detail::expect;
  const auto start = std::chrono::steady_clock::now();
  VerifyRecord record;
  record.a = a;

  const auto gens = forms.generators(a);
  const Integer frob = forms.frobenius(a);
  const Nat genus = forms.genus(a);
  const Nat& fa = fib(a);

  if (a >= 3 && fa <= cfg.oracle_bound) {
    record.oracle_run = true;
    std::vector<std::uint64_t> raw;
    for (const auto& g : gens) raw.push_back(to_u64(g));
    const NumericalSemigroup oracle(raw, cfg.limits);
    const auto m = oracle.multiplicity();

    const auto closed_apery = forms.apery(a, cfg.oracle_bound);
    record.checks.push_back(compare("apery", closed_apery.w, oracle.apery(m).w));
    record.checks.push_back(compare("frobenius", frob, Integer(oracle.frobenius())));
    record.checks.push_back(compare("genus", genus, Nat(oracle.genus())));
    record.checks.push_back(compare("msg", raw, oracle.minimal_generators()));
    record.checks.push_back(compare("e", std::uint64_t{a - 1}, oracle.embedding_dimension()));
    record.checks.push_back(compare("m", fa, Nat(m)));
    record.checks.push_back(
        compare("frobenius_from_apery", frob, Integer(closed_apery.max()) - fa));
  }

  if (a >= 3) {
    const std::size_t e = a - 1;
    record.checks.push_back(compare("frobenius_from_e_m", frob, Integer(e / 2) * fa - 1));
    record.checks.push_back(compare("genus_binomial_sum", genus, family_genus_sum(a)));
    if (a >= 5) {
      const Nat rhs = forms.genus(a - 1) + forms.genus(a - 2) + fib(a - 2);
      record.checks.push_back(compare("genus_recurrence", genus, rhs));
    }
    if (a <= 20) {
      Nat beta_sum = 0;
      const auto n = to_u64(fa);
      for (std::uint64_t x = 1; x < n; ++x) beta_sum += beta(Nat(x));
      record.checks.push_back(compare("genus_beta_sum", genus, beta_sum));
    }
    if (a <= kBijectionMaxA)
      record.checks.push_back(
          expect("zeckendorf_bijection", zeckendorf_bijection_check(a), "bijection fails"));
    const Integer slack = Integer(e) * (frob + 1 - genus) - (frob + 1);
    record.checks.push_back(expect("wilf", slack >= 0, "negative slack " + to_decimal(slack)));
  } else {
    record.checks.push_back(compare("frobenius_of_N", frob, Integer(-1)));
    record.checks.push_back(compare("genus_of_N", genus, Nat(0)));
  }

  record.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

/// Runs verify_parameter for a = 3..a_max (oracle checks only where f_a is
/// within the oracle bound). Records are in ascending a regardless of
/// cfg.parallel.
inline VerifyReport verify_family(std::size_t a_max, const VerifyConfig& cfg,
                                  const ClosedForms& forms = {}) {
  VerifyReport report;
  const std::size_t reach = oracle_reach(cfg.oracle_bound);
  report.oracle_max_a = std::min(reach, a_max);
  if (a_max < 3) return report;

  const std::size_t count = a_max - 2;
  report.records.resize(count);
  for_each_index(count, cfg.parallel, [&](std::size_t i) {
    report.records[i] = verify_parameter(i + 3, cfg, forms);
  });
  return report;
}

}  // namespace fibsg
