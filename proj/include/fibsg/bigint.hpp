#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fibsg {

// Signed arbitrary precision integer. Quantities documented as "Nat" are
// never negative; the Frobenius number of N is the only negative value (-1).
using Integer = boost::multiprecision::cpp_int;
using Nat = Integer;

inline std::string to_decimal(const Integer& v) { return v.str(); }

/// Parses an optionally signed base-10 literal. No whitespace, no prefixes.
inline Integer parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("empty decimal literal");
  Integer out = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9')
      throw std::invalid_argument("invalid decimal literal: " + std::string(text));
    out *= 10;
    out += c - '0';
  }
  return negative ? Integer(-out) : out;
}

inline bool fits_u64(const Integer& v) {
  return v >= 0 && v <= std::numeric_limits<std::uint64_t>::max();
}

inline std::uint64_t to_u64(const Integer& v) {
  if (!fits_u64(v)) throw std::overflow_error("value out of uint64 range: " + v.str());
  return v.convert_to<std::uint64_t>();
}

}  // namespace fibsg
