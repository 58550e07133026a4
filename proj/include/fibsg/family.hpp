#pragma once

// Closed forms for S(a) = <f_a + f_0, f_a + f_1, f_a + f_2, ...>.
// For a in {0, 1, 2} the family degenerates to N and every function here
// returns the values of N instead of failing.

#include "fibsg/bigint.hpp"
#include "fibsg/error.hpp"
#include "fibsg/fibonacci.hpp"
#include "fibsg/semigroup.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibsg {

inline constexpr std::uint64_t kDefaultTableBound = 1'000'000;
inline constexpr std::size_t kSparseEnumerationMaxN = 40;
inline constexpr std::size_t kBijectionMaxA = 25;

/// Minimal generators f_a + f_0, f_a + f_2, ..., f_a + f_{a-1}. Index 1 is
/// skipped because f_1 = f_2.
inline std::vector<Nat> family_generators(std::size_t a) {
  if (a <= 2) return {Nat(1)};
  std::vector<Nat> out;
  out.reserve(a - 1);
  const Nat& fa = fib(a);
  out.push_back(fa);
  for (std::size_t i = 2; i < a; ++i) out.push_back(fa + fib(i));
  return out;
}

/// w(x) = beta(x) f_a + x for 0 <= x < f_a, without building the table.
inline Nat family_apery_element(std::size_t a, const Nat& x) {
  if (a <= 2) {
    if (x != 0) throw Error(ErrorKind::PreconditionViolation, "S(a) = N has only residue 0");
    return 0;
  }
  if (x < 0 || x >= fib(a))
    throw Error(ErrorKind::PreconditionViolation, "residue out of range [0, f_a)");
  return Nat(beta(x)) * fib(a) + x;
}

/// Ap(S(a), f_a) materialized; fails with TableTooLarge when f_a > table_bound.
inline AperyTable family_apery(std::size_t a, std::uint64_t table_bound = kDefaultTableBound) {
  if (a <= 2) return AperyTable{1, {0}};
  const Nat& fa = fib(a);
  if (fa > table_bound)
    throw Error(ErrorKind::TableTooLarge, "f_" + std::to_string(a) + " = " + to_decimal(fa) +
                                              " exceeds the table bound " +
                                              std::to_string(table_bound));
  const auto n = to_u64(fa);
  AperyTable table{n, std::vector<std::uint64_t>(n)};
  for (std::uint64_t x = 0; x < n; ++x) table.w[x] = beta(Nat(x)) * n + x;
  return table;
}

/// F(S(a)) = floor((a-1)/2) f_a - 1; also valid for a = 2 where it gives -1.
inline Integer family_frobenius(std::size_t a) {
  if (a <= 1) return -1;
  return Integer((a - 1) / 2) * fib(a) - 1;
}

inline Nat binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Nat out = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

/// g(S(a)) = sum_{i=1}^{floor((a-1)/2)} i * C(a-1-i, i).
inline Nat family_genus_sum(std::size_t a) {
  if (a < 3) throw Error(ErrorKind::PreconditionViolation, "binomial genus sum needs a >= 3");
  Nat sum = 0;
  for (std::size_t i = 1; i <= (a - 1) / 2; ++i) sum += Nat(i) * binomial(a - 1 - i, i);
  return sum;
}

/// g(S(a)) = ((a-2) f_a + a f_{a-2}) / 5, evaluated as one exact division.
inline Nat family_genus(std::size_t a) {
  if (a <= 1) return 0;
  const Nat numerator = Nat(a - 2) * fib(a) + Nat(a) * fib(a - 2);
  if (numerator % 5 != 0)
    throw std::logic_error("genus numerator not divisible by 5 for a = " + std::to_string(a));
  return numerator / 5;
}

/// g(a) = g(a-1) + g(a-2) + f_{a-2}.
inline bool family_genus_recurrence_check(std::size_t a) {
  if (a < 5) throw Error(ErrorKind::PreconditionViolation, "genus recurrence needs a >= 5");
  return family_genus(a) == family_genus(a - 1) + family_genus(a - 2) + fib(a - 2);
}

/// Number of m-subsets of {2, ..., n-1} with no two consecutive elements.
inline Nat kaplansky_count(std::size_t n, std::size_t m) {
  if (n < 2) throw Error(ErrorKind::PreconditionViolation, "kaplansky_count needs n >= 2");
  if (m == 0) return 1;
  if (2 * m > n - 1) return 0;
  return binomial(n - 1 - m, m);
}

struct SparseSubsetFamily {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::vector<std::size_t>> subsets;  // lexicographic order
};

inline SparseSubsetFamily enumerate_sparse_subsets(std::size_t n, std::size_t m) {
  if (n < 2) throw Error(ErrorKind::PreconditionViolation, "enumerate_sparse_subsets needs n >= 2");
  if (n > kSparseEnumerationMaxN)
    throw Error(ErrorKind::EnumerationTooLarge,
                "n = " + std::to_string(n) + " above enumeration bound " +
                    std::to_string(kSparseEnumerationMaxN));
  SparseSubsetFamily out{n, m, {}};
  std::vector<std::size_t> current;
  // Smallest admissible next element is `from`; elements live in [2, n-1].
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (current.size() == m) {
      out.subsets.push_back(current);
      return;
    }
    const std::size_t remaining = m - current.size();
    for (std::size_t v = from; v + 2 * (remaining - 1) <= n - 1; ++v) {
      current.push_back(v);
      self(self, v + 2);
      current.pop_back();
    }
  };
  extend(extend, 2);
  return out;
}

struct BijectionReport {
  bool holds = false;
  std::vector<std::uint64_t> class_sizes;  // class_sizes[m-1]: values with beta = m
  std::uint64_t total = 0;                 // number of values covered, f_a - 1
  bool fibonacci_binomial_identity = false;
};

/// Checks that x -> B(x) maps {1, ..., f_a - 1} bijectively onto the sparse
/// subsets F_a(1) u ... u F_a(floor((a-1)/2)), and that
/// f_a = sum_j C(a-1-j, j).
inline BijectionReport zeckendorf_bijection_report(std::size_t a) {
  if (a < 3 || a > kBijectionMaxA)
    throw Error(ErrorKind::PreconditionViolation,
                "bijection check needs 3 <= a <= " + std::to_string(kBijectionMaxA));
  BijectionReport report;
  const std::size_t max_class = (a - 1) / 2;
  report.class_sizes.assign(max_class, 0);

  const auto fa = to_u64(fib(a));
  std::vector<std::uint32_t> masks;
  masks.reserve(fa);
  bool in_range = true;
  for (std::uint64_t x = 1; x < fa; ++x) {
    const auto z = zeckendorf(Nat(x));
    std::uint32_t mask = 0;
    std::size_t previous = 0;
    for (auto idx : z.indices) {
      if (idx < 2 || idx > a - 1 || (previous != 0 && idx == previous + 1)) in_range = false;
      mask |= std::uint32_t{1} << idx;
      previous = idx;
    }
    if (z.beta() == 0 || z.beta() > max_class) {
      in_range = false;
    } else {
      ++report.class_sizes[z.beta() - 1];
    }
    masks.push_back(mask);
  }
  report.total = masks.size();
  std::sort(masks.begin(), masks.end());
  const bool injective = std::adjacent_find(masks.begin(), masks.end()) == masks.end();

  bool counts_match = true;
  for (std::size_t m = 1; m <= max_class; ++m)
    if (Nat(report.class_sizes[m - 1]) != kaplansky_count(a, m)) counts_match = false;

  Nat identity = 0;
  for (std::size_t j = 0; j <= max_class; ++j) identity += binomial(a - 1 - j, j);
  report.fibonacci_binomial_identity = identity == fib(a);

  report.holds = in_range && injective && counts_match && report.fibonacci_binomial_identity;
  return report;
}

inline bool zeckendorf_bijection_check(std::size_t a) { return zeckendorf_bijection_report(a).holds; }

struct FamilySummary {
  std::size_t a = 0;
  std::vector<Nat> generators;
  std::size_t embedding_dimension = 0;
  Nat multiplicity = 0;
  Integer frobenius = -1;
  Nat genus = 0;
  Nat n_count = 0;
  Integer wilf_slack = 0;
};

inline FamilySummary family_summary(std::size_t a) {
  FamilySummary s;
  s.a = a;
  s.generators = family_generators(a);
  s.embedding_dimension = s.generators.size();
  s.multiplicity = s.generators.front();
  s.frobenius = family_frobenius(a);
  s.genus = family_genus(a);
  s.n_count = s.frobenius + 1 - s.genus;
  s.wilf_slack = Integer(s.embedding_dimension) * s.n_count - (s.frobenius + 1);
  if (s.wilf_slack < 0)
    throw std::logic_error("Wilf inequality fails for S(" + std::to_string(a) + ")");
  return s;
}

}  // namespace fibsg
