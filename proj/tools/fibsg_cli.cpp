// fibsg: invariants of the numerical semigroups S(a) generated by
// f_a + f_n, and of arbitrary numerical semigroups.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or validation
// error, 3 resource limit exceeded.

#include "fibsg/fibsg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct RunConfig {
  fibsg::Format format = fibsg::Format::text;
  std::uint64_t oracle_bound = 1'000'000;
  std::uint64_t table_bound = 1'000'000;
  bool parallel = false;
  std::string inject_fault;
};

template <typename Range>
std::string join(const Range& values, std::string_view sep) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << sep;
    out << v;
    first = false;
  }
  return out.str();
}

template <typename Range>
nlohmann::ordered_json decimal_array(const Range& values) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& v : values) out.push_back(fibsg::to_decimal(fibsg::Integer(v)));
  return out;
}

int cmd_info(std::size_t a, const RunConfig& cfg) {
  const auto summary = fibsg::family_summary(a);
  const auto record = fibsg::OutputRecord::from_summary(summary);
  switch (cfg.format) {
    case fibsg::Format::csv:
      std::cout << fibsg::render_csv(std::span(&record, 1));
      break;
    case fibsg::Format::json: {
      auto j = fibsg::to_json(record);
      j["generators"] = decimal_array(summary.generators);
      std::cout << j.dump(2) << '\n';
      break;
    }
    case fibsg::Format::text:
      if (a <= 2)
        std::cout << "S(" << a << ") = N\n";
      else
        std::cout << "S(" << a << ") = <" << join(summary.generators, ", ") << ">\n";
      std::cout << "minimal generators: " << join(summary.generators, ",") << '\n'
                << "multiplicity m = " << summary.multiplicity << '\n'
                << "embedding dimension e = " << summary.embedding_dimension << '\n'
                << "Frobenius number F = " << summary.frobenius << '\n'
                << "genus g = " << summary.genus << '\n'
                << "n = " << summary.n_count << '\n'
                << "Wilf slack e*n - (F+1) = " << summary.wilf_slack << '\n';
      break;
  }
  return kExitOk;
}

int cmd_apery(std::size_t a, const RunConfig& cfg) {
  fibsg::AperyTable table;
  try {
    table = fibsg::family_apery(a, cfg.table_bound);
  } catch (const fibsg::Error& e) {
    if (e.kind() != fibsg::ErrorKind::TableTooLarge) throw;
    std::cerr << "error: " << e.what() << "; raise it with --table-bound (or FIBSG_TABLE_BOUND)\n";
    return kExitResource;
  }
  const std::uint64_t n = table.n;
  auto beta_of = [&](std::uint64_t x) { return (table.w[x] - x) / n; };
  switch (cfg.format) {
    case fibsg::Format::csv:
      std::cout << "x,beta,w\n";
      for (std::uint64_t x = 0; x < n; ++x) std::cout << x << ',' << beta_of(x) << ',' << table.w[x] << '\n';
      break;
    case fibsg::Format::json: {
      auto rows = nlohmann::ordered_json::array();
      for (std::uint64_t x = 0; x < n; ++x)
        rows.push_back({{"x", x}, {"beta", beta_of(x)}, {"w", table.w[x]}});
      std::cout << rows.dump(2) << '\n';
      break;
    }
    case fibsg::Format::text:
      std::cout << std::setw(10) << "x" << std::setw(6) << "beta" << std::setw(14) << "w" << '\n';
      for (std::uint64_t x = 0; x < n; ++x)
        std::cout << std::setw(10) << x << std::setw(6) << beta_of(x) << std::setw(14) << table.w[x] << '\n';
      break;
  }
  return kExitOk;
}

int cmd_table(std::size_t a_min, std::size_t a_max, const RunConfig& cfg) {
  if (a_min > a_max)
    throw fibsg::Error(fibsg::ErrorKind::InvalidRange,
                       "a_min " + std::to_string(a_min) + " > a_max " + std::to_string(a_max));
  std::vector<fibsg::OutputRecord> records(a_max - a_min + 1);
  fibsg::for_each_index(records.size(), cfg.parallel, [&](std::size_t i) {
    records[i] = fibsg::OutputRecord::from_summary(fibsg::family_summary(a_min + i));
  });
  switch (cfg.format) {
    case fibsg::Format::csv: std::cout << fibsg::render_csv(records); break;
    case fibsg::Format::json: std::cout << fibsg::render_json(records); break;
    case fibsg::Format::text:
      std::cout << std::left;
      for (auto col : fibsg::kColumns) std::cout << std::setw(col == "a" || col == "e" ? 5 : 22) << col;
      std::cout << '\n';
      for (const auto& r : records) {
        std::cout << std::setw(5) << r.a << std::setw(22) << r.m << std::setw(5) << r.e << std::setw(22)
                  << r.frobenius << std::setw(22) << r.genus << std::setw(22) << r.n_count << std::setw(22)
                  << r.wilf_slack << '\n';
      }
      break;
  }
  return kExitOk;
}

fibsg::ClosedForms forms_for(const std::string& fault) {
  fibsg::ClosedForms forms;
  if (fault == "frobenius") {
    forms.frobenius = [](std::size_t a) { return fibsg::family_frobenius(a) + 1; };
  } else if (fault == "genus") {
    forms.genus = [](std::size_t a) { return fibsg::family_genus(a) + 1; };
  } else if (fault == "apery") {
    forms.apery = [](std::size_t a, std::uint64_t bound) {
      auto t = fibsg::family_apery(a, bound);
      if (t.w.size() > 1) t.w.back() += t.n;
      return t;
    };
  } else if (!fault.empty()) {
    throw fibsg::Error(fibsg::ErrorKind::PreconditionViolation, "unknown fault " + fault);
  }
  return forms;
}

int cmd_verify(std::size_t a_max, const RunConfig& cfg) {
  fibsg::VerifyConfig vcfg;
  vcfg.oracle_bound = cfg.oracle_bound;
  vcfg.parallel = cfg.parallel;
  const auto report = fibsg::verify_family(a_max, vcfg, forms_for(cfg.inject_fault));

  switch (cfg.format) {
    case fibsg::Format::csv: {
      std::vector<fibsg::OutputRecord> rows;
      for (const auto& r : report.records) {
        auto row = fibsg::OutputRecord::from_summary(fibsg::family_summary(r.a));
        row.verified = r.passed();
        rows.push_back(std::move(row));
      }
      std::cout << fibsg::render_csv(rows);
      break;
    }
    case fibsg::Format::json: {
      nlohmann::ordered_json j;
      j["a_max"] = a_max;
      j["oracle_max_a"] = report.oracle_max_a;
      j["passed"] = report.passed();
      auto records = nlohmann::ordered_json::array();
      for (const auto& r : report.records) {
        nlohmann::ordered_json item;
        item["a"] = r.a;
        item["oracle"] = r.oracle_run;
        item["passed"] = r.passed();
        item["seconds"] = r.seconds;
        auto failures = nlohmann::ordered_json::array();
        for (const auto& c : r.checks)
          if (!c.passed) failures.push_back({{"check", c.name}, {"detail", c.detail}});
        item["failures"] = failures;
        records.push_back(item);
      }
      j["records"] = records;
      std::cout << j.dump(2) << '\n';
      break;
    }
    case fibsg::Format::text:
      for (const auto& r : report.records) {
        std::cout << "a=" << r.a << (r.oracle_run ? " oracle+identities " : " identities ")
                  << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks.size() << " checks, " << std::fixed
                  << std::setprecision(3) << r.seconds << "s)\n";
        for (const auto& c : r.checks)
          if (!c.passed) std::cout << "  " << c.name << ": " << c.detail << '\n';
      }
      if (report.oracle_max_a >= 3)
        std::cout << "oracle checks for a in [3, " << report.oracle_max_a << "]\n";
      else
        std::cout << "no oracle checks (oracle bound below f_3)\n";
      std::cout << (report.passed() ? "all checks passed" : "VERIFICATION FAILED") << '\n';
      break;
  }
  return report.passed() ? kExitOk : kExitMismatch;
}

int cmd_semigroup(const std::vector<std::string>& raw, const RunConfig& cfg) {
  std::vector<std::uint64_t> gens;
  for (const auto& text : raw) {
    const auto v = fibsg::parse_decimal(text);
    if (v < 0) throw fibsg::Error(fibsg::ErrorKind::PreconditionViolation, "negative generator " + text);
    gens.push_back(fibsg::to_u64(v));
  }
  fibsg::OracleLimits limits;
  limits.membership_cells = cfg.oracle_bound * 10;
  limits.apery_pivot = cfg.oracle_bound * 10;
  const fibsg::NumericalSemigroup s(gens, limits);
  const auto summary = s.summary();
  const auto msg = s.minimal_generators();
  const auto gaps = s.gaps();

  switch (cfg.format) {
    case fibsg::Format::csv:
      std::cout << "frobenius,genus,e,m,n,wilf_holds,wilf_slack,msg,gaps\n"
                << summary.frobenius << ',' << summary.genus << ',' << summary.embedding_dimension << ','
                << summary.multiplicity << ',' << summary.n_count << ','
                << (summary.wilf_holds ? "true" : "false") << ',' << summary.wilf_slack << ','
                << join(msg, " ") << ',' << join(gaps, " ") << '\n';
      break;
    case fibsg::Format::json: {
      nlohmann::ordered_json j;
      j["generators"] = decimal_array(s.generators());
      j["frobenius"] = std::to_string(summary.frobenius);
      j["genus"] = std::to_string(summary.genus);
      j["msg"] = decimal_array(msg);
      j["e"] = summary.embedding_dimension;
      j["m"] = std::to_string(summary.multiplicity);
      j["n"] = std::to_string(summary.n_count);
      j["wilf_holds"] = summary.wilf_holds;
      j["wilf_slack"] = std::to_string(summary.wilf_slack);
      j["gaps"] = decimal_array(gaps);
      std::cout << j.dump(2) << '\n';
      break;
    }
    case fibsg::Format::text:
      std::cout << "S = <" << join(s.generators(), ", ") << ">\n"
                << "Frobenius number F = " << summary.frobenius << '\n'
                << "genus g = " << summary.genus << '\n'
                << "minimal generators: " << join(msg, ",") << '\n'
                << "embedding dimension e = " << summary.embedding_dimension << '\n'
                << "multiplicity m = " << summary.multiplicity << '\n'
                << "n = " << summary.n_count << '\n'
                << "Wilf: " << (summary.wilf_holds ? "holds" : "fails")
                << " (slack " << summary.wilf_slack << ")\n"
                << "gaps: " << join(gaps, ",") << '\n';
      break;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of numerical semigroups generated by Fibonacci numbers shifted by f_a"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->envname("FIBSG_FORMAT");
  app.add_option("--oracle-bound", cfg.oracle_bound, "Largest f_a checked against the generic oracle")
      ->check(CLI::PositiveNumber)
      ->envname("FIBSG_ORACLE_BOUND");
  app.add_option("--table-bound", cfg.table_bound, "Largest f_a for which an Apery table is materialized")
      ->check(CLI::PositiveNumber)
      ->envname("FIBSG_TABLE_BOUND");
  app.add_flag("--parallel", cfg.parallel, "Evaluate independent parameters concurrently");
  app.add_option("--inject-fault", cfg.inject_fault, "Perturb one closed form (testing only)")
      ->check(CLI::IsMember({"frobenius", "genus", "apery"}))
      ->group("");

  std::size_t a = 0;
  std::size_t a_min = 0;
  std::size_t a_max = 0;
  std::vector<std::string> gens;

  auto* info = app.add_subcommand("info", "Closed-form invariants of S(a)");
  info->add_option("a", a, "Family parameter")->required();
  auto* apery = app.add_subcommand("apery", "Apery set of S(a) with respect to f_a");
  apery->add_option("a", a, "Family parameter")->required();
  auto* table = app.add_subcommand("table", "Invariants for a range of parameters");
  table->add_option("a_min", a_min, "First parameter")->required();
  table->add_option("a_max", a_max, "Last parameter")->required();
  auto* verify = app.add_subcommand("verify", "Check the closed forms against the generic oracle");
  verify->add_option("a_max", a_max, "Last parameter")->required();
  auto* semigroup = app.add_subcommand("semigroup", "Invariants of <g1, g2, ...>");
  semigroup->add_option("generators", gens, "Generators")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.format = *fibsg::parse_format(format);

  try {
    if (*info) return cmd_info(a, cfg);
    if (*apery) return cmd_apery(a, cfg);
    if (*table) return cmd_table(a_min, a_max, cfg);
    if (*verify) return cmd_verify(a_max, cfg);
    if (*semigroup) return cmd_semigroup(gens, cfg);
  } catch (const fibsg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_resource_limit() ? kExitResource : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}
