#pragma once

// Slow, obviously-correct reference computations. Nothing in here calls into
// the library's algorithms; tests compare the two.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt fib_iterative(std::size_t n) {
  BigInt prev = 0, cur = 1;
  if (n == 0) return 0;
  for (std::size_t i = 1; i < n; ++i) {
    BigInt next = prev + cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline std::vector<std::uint64_t> fib_u64_table(std::size_t count) {
  std::vector<std::uint64_t> f{0, 1};
  while (f.size() < count) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

inline constexpr std::uint64_t kMinWeightBound = 100'000;

/// min sum c_i over (c_2, ..., c_max_index) with sum c_i f_i = x, by unbounded
/// coin-change DP with coins f_2, ..., f_max_index.
inline std::uint64_t min_weight(std::uint64_t x, std::size_t max_index,
                                std::uint64_t bound = kMinWeightBound) {
  if (max_index < 2) throw std::invalid_argument("max_index must be >= 2");
  if (x > bound) throw std::out_of_range("min_weight oracle bound exceeded");
  const auto f = fib_u64_table(max_index + 1);
  constexpr auto kInf = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> best(x + 1, kInf);
  best[0] = 0;
  for (std::uint64_t v = 1; v <= x; ++v)
    for (std::size_t i = 2; i <= max_index; ++i)
      if (f[i] <= v && best[v - f[i]] != kInf) best[v] = std::min(best[v], best[v - f[i]] + 1);
  return best[x];
}

/// Every set of pairwise non-adjacent indices >= 2 whose Fibonacci numbers sum to x.
inline std::vector<std::vector<std::size_t>> all_sparse_representations(std::uint64_t x) {
  const auto f = fib_u64_table(94);
  std::size_t top = 2;
  while (top + 1 < f.size() && f[top + 1] <= x) ++top;
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> chosen;
  auto search = [&](auto&& self, std::size_t from, std::uint64_t sum) -> void {
    if (sum == x) {
      out.push_back(chosen);
      return;
    }
    for (std::size_t i = from; i <= top; ++i) {
      if (sum + f[i] > x) break;
      chosen.push_back(i);
      self(self, i + 2, sum + f[i]);
      chosen.pop_back();
    }
  };
  search(search, 2, 0);
  return out;
}

/// Reachability of 0..limit in <gens>, straight from the definition.
inline std::vector<char> members_upto(const std::vector<std::uint64_t>& gens, std::uint64_t limit) {
  std::vector<char> in(limit + 1, 0);
  in[0] = 1;
  for (std::uint64_t v = 0; v <= limit; ++v) {
    if (!in[v]) continue;
    for (auto g : gens)
      if (v + g <= limit) in[v + g] = 1;
  }
  return in;
}

/// Smallest member in each residue class mod n, scanning a reachability table.
inline std::vector<std::uint64_t> apery_by_scan(const std::vector<std::uint64_t>& gens, std::uint64_t n,
                                                std::uint64_t limit) {
  const auto in = members_upto(gens, limit);
  constexpr auto kUnset = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> w(n, kUnset);
  for (std::uint64_t v = 0; v <= limit; ++v)
    if (in[v] && w[v % n] == kUnset) w[v % n] = v;
  if (std::find(w.begin(), w.end(), kUnset) != w.end())
    throw std::runtime_error("scan limit too small for Apery set");
  return w;
}

/// Gaps of <gens>, assuming every gap is below limit - max(gens).
inline std::vector<std::uint64_t> gaps_by_scan(const std::vector<std::uint64_t>& gens, std::uint64_t limit) {
  const auto in = members_upto(gens, limit);
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 0; v <= limit; ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

/// S* \ (S* + S*) by checking every pair, within [1, limit].
inline std::vector<std::uint64_t> msg_by_pairs(const std::vector<std::uint64_t>& gens, std::uint64_t limit) {
  const auto in = members_upto(gens, limit);
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s <= limit; ++s) {
    if (!in[s]) continue;
    bool sum = false;
    for (std::uint64_t t = 1; t <= s / 2 && !sum; ++t) sum = in[t] && in[s - t];
    if (!sum) out.push_back(s);
  }
  return out;
}

inline BigInt binomial_pascal(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::vector<BigInt> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

}  // namespace oracle
