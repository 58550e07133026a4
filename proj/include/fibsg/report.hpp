#pragma once

// Row-oriented output for the family invariants: fixed CSV columns and JSON
// keys, exact decimal everywhere. Unbounded quantities go into JSON as
// decimal strings since JSON numbers would not survive most parsers intact.

#include "fibsg/bigint.hpp"
#include "fibsg/family.hpp"

#include <json.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibsg {

enum class Format { text, csv, json };

inline std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

struct OutputRecord {
  std::size_t a = 0;
  Nat m = 1;
  std::size_t e = 1;
  Integer frobenius = -1;
  Nat genus = 0;
  Nat n_count = 0;
  Integer wilf_slack = 0;
  std::optional<bool> verified;

  static OutputRecord from_summary(const FamilySummary& s) {
    return {s.a, s.multiplicity, s.embedding_dimension, s.frobenius, s.genus, s.n_count, s.wilf_slack, {}};
  }

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline constexpr std::array<std::string_view, 7> kColumns = {"a",     "m", "e",         "frobenius",
                                                             "genus", "n", "wilf_slack"};

inline std::string csv_header(bool with_verified = false) {
  std::string out;
  for (std::size_t i = 0; i < kColumns.size(); ++i) {
    if (i) out += ',';
    out += kColumns[i];
  }
  if (with_verified) out += ",verified";
  return out;
}

inline std::string to_csv_row(const OutputRecord& r) {
  std::ostringstream out;
  out << r.a << ',' << r.m << ',' << r.e << ',' << r.frobenius << ',' << r.genus << ',' << r.n_count
      << ',' << r.wilf_slack;
  if (r.verified) out << ',' << (*r.verified ? "true" : "false");
  return out.str();
}

inline OutputRecord parse_csv_row(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (cells.size() != 7 && cells.size() != 8)
    throw std::invalid_argument("expected 7 or 8 CSV cells, got " + std::to_string(cells.size()));
  OutputRecord r;
  r.a = to_u64(parse_decimal(cells[0]));
  r.m = parse_decimal(cells[1]);
  r.e = to_u64(parse_decimal(cells[2]));
  r.frobenius = parse_decimal(cells[3]);
  r.genus = parse_decimal(cells[4]);
  r.n_count = parse_decimal(cells[5]);
  r.wilf_slack = parse_decimal(cells[6]);
  if (cells.size() == 8) {
    if (cells[7] == "true") r.verified = true;
    else if (cells[7] == "false") r.verified = false;
    else throw std::invalid_argument("verified must be true or false");
  }
  return r;
}

inline nlohmann::ordered_json to_json(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["a"] = r.a;
  j["m"] = to_decimal(r.m);
  j["e"] = r.e;
  j["frobenius"] = to_decimal(r.frobenius);
  j["genus"] = to_decimal(r.genus);
  j["n"] = to_decimal(r.n_count);
  j["wilf_slack"] = to_decimal(r.wilf_slack);
  if (r.verified) j["verified"] = *r.verified;
  return j;
}

inline OutputRecord record_from_json(const nlohmann::ordered_json& j) {
  OutputRecord r;
  r.a = j.at("a").get<std::size_t>();
  r.m = parse_decimal(j.at("m").get<std::string>());
  r.e = j.at("e").get<std::size_t>();
  r.frobenius = parse_decimal(j.at("frobenius").get<std::string>());
  r.genus = parse_decimal(j.at("genus").get<std::string>());
  r.n_count = parse_decimal(j.at("n").get<std::string>());
  r.wilf_slack = parse_decimal(j.at("wilf_slack").get<std::string>());
  if (j.contains("verified")) r.verified = j.at("verified").get<bool>();
  return r;
}

inline std::string render_csv(std::span<const OutputRecord> records) {
  bool with_verified = false;
  for (const auto& r : records) with_verified = with_verified || r.verified.has_value();
  std::string out = csv_header(with_verified) + '\n';
  for (const auto& r : records) out += to_csv_row(r) + '\n';
  return out;
}

inline std::string render_json(std::span<const OutputRecord> records) {
  auto array = nlohmann::ordered_json::array();
  for (const auto& r : records) array.push_back(to_json(r));
  return array.dump(2) + '\n';
}

inline std::vector<OutputRecord> parse_csv(std::string_view text) {
  std::vector<OutputRecord> out;
  bool header = true;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(start, end - start);
    if (header) {
      if (!line.starts_with(csv_header())) throw std::invalid_argument("unexpected CSV header");
      header = false;
    } else if (!line.empty()) {
      out.push_back(parse_csv_row(line));
    }
    start = end + 1;
  }
  return out;
}

inline std::vector<OutputRecord> parse_json(std::string_view text) {
  std::vector<OutputRecord> out;
  for (const auto& item : nlohmann::ordered_json::parse(text)) out.push_back(record_from_json(item));
  return out;
}

}  // namespace fibsg
