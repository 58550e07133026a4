#pragma once

// Generic numerical semigroups given by a finite generator list. Everything
// here is computed from the generators alone; nothing knows about the
// Fibonacci family.

#include "fibsg/bigint.hpp"
#include "fibsg/error.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fibsg {

struct AperyTable {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> w;  // w[i]: least element congruent to i mod n

  std::uint64_t max() const { return w.empty() ? 0 : *std::max_element(w.begin(), w.end()); }

  friend bool operator==(const AperyTable&, const AperyTable&) = default;
};

struct WilfResult {
  bool holds = false;
  std::int64_t slack = 0;  // e * n - (F + 1)
};

struct SemigroupSummary {
  std::int64_t frobenius = -1;
  std::uint64_t genus = 0;
  std::uint64_t embedding_dimension = 0;
  std::uint64_t multiplicity = 0;
  std::uint64_t n_count = 0;
  bool wilf_holds = true;
  std::int64_t wilf_slack = 0;
};

struct OracleLimits {
  std::uint64_t membership_cells = 10'000'000;  // reachability DP table size
  std::uint64_t apery_pivot = 10'000'000;       // residues in a shortest-path run
};

class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::span<const std::uint64_t> raw, OracleLimits limits = {})
      : limits_(limits), cache_(std::make_shared<Cache>()) {
    if (raw.empty()) throw Error(ErrorKind::EmptyGenerators, "generator list is empty");
    gens_.assign(raw.begin(), raw.end());
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    if (gens_.front() == 0) throw Error(ErrorKind::ZeroGenerator, "generator 0 is not allowed");
    std::uint64_t g = 0;
    for (auto v : gens_) g = std::gcd(g, v);
    if (g != 1)
      throw Error(ErrorKind::NotCoprime,
                  "generators have gcd " + std::to_string(g) + ", complement would be infinite");
  }

  NumericalSemigroup(std::initializer_list<std::uint64_t> raw, OracleLimits limits = {})
      : NumericalSemigroup(std::span<const std::uint64_t>(raw.begin(), raw.size()), limits) {}

  const std::vector<std::uint64_t>& generators() const { return gens_; }
  std::uint64_t multiplicity() const { return gens_.front(); }
  const OracleLimits& limits() const { return limits_; }

  /// Membership by reachability over the generators (unbounded coin DP). Kept
  /// separate from the Apery route on purpose: the two cross-check each other.
  bool contains(std::int64_t x) const {
    if (x < 0) return false;
    if (x == 0) return true;
    return (*reachability(static_cast<std::uint64_t>(x)))[static_cast<std::size_t>(x)];
  }

  /// Membership flags for 0..limit from the same DP as contains().
  std::vector<bool> membership_prefix(std::uint64_t limit) const {
    auto table = reachability(limit);
    return {table->begin(), table->begin() + static_cast<std::ptrdiff_t>(limit + 1)};
  }

  /// Least element of each residue class mod n, as single-source shortest
  /// paths from residue 0 where each generator g is an arc r -> r+g of length g.
  AperyTable apery(std::uint64_t n) const {
    if (n == 0) throw Error(ErrorKind::PivotZero, "Apery pivot must be nonzero");
    if (!std::binary_search(gens_.begin(), gens_.end(), n) && !contains(static_cast<std::int64_t>(n)))
      throw Error(ErrorKind::PivotNotInSemigroup, std::to_string(n) + " is not in the semigroup");
    if (n > limits_.apery_pivot)
      throw Error(ErrorKind::ResourceLimit, "Apery pivot " + std::to_string(n) +
                                                " exceeds limit " + std::to_string(limits_.apery_pivot));

    constexpr auto kInf = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> dist(n, kInf);
    using Entry = std::pair<std::uint64_t, std::uint64_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[0] = 0;
    queue.emplace(0, 0);
    while (!queue.empty()) {
      auto [d, r] = queue.top();
      queue.pop();
      if (d != dist[r]) continue;
      for (auto g : gens_) {
        if (g % n == 0) continue;
        const std::uint64_t next = (r + g % n) % n;
        const std::uint64_t nd = d + g;
        if (nd < dist[next]) {
          dist[next] = nd;
          queue.emplace(nd, next);
        }
      }
    }
    return AperyTable{n, std::move(dist)};
  }

  /// Ap(S, m(S)), computed once and shared between copies.
  const AperyTable& apery_at_multiplicity() const {
    std::call_once(cache_->apery_once, [this] { cache_->apery = apery(multiplicity()); });
    return cache_->apery;
  }

  /// x is in S iff x >= w(x mod m).
  bool contains_by_apery(std::int64_t x) const {
    if (x < 0) return false;
    const auto& table = apery_at_multiplicity();
    const auto ux = static_cast<std::uint64_t>(x);
    return ux >= table.w[ux % table.n];
  }

  std::int64_t frobenius() const {
    const auto& table = apery_at_multiplicity();
    return static_cast<std::int64_t>(table.max()) - static_cast<std::int64_t>(table.n);
  }

  /// g(S) = (1/n) sum(Ap) - (n-1)/2, checked against sum of k_i with w_i = k_i n + i.
  std::uint64_t genus() const {
    const auto& table = apery_at_multiplicity();
    const Nat n = table.n;
    Nat sum = 0;
    Nat k_sum = 0;
    for (std::uint64_t i = 0; i < table.n; ++i) {
      sum += table.w[i];
      k_sum += (table.w[i] - i) / table.n;
    }
    const Nat twice = 2 * sum - n * (n - 1);
    if (twice % (2 * n) != 0 || twice / (2 * n) != k_sum)
      throw std::logic_error("genus formulas disagree for Apery table");
    return to_u64(k_sum);
  }

  /// msg(S) = S* \ (S* + S*), scanned over [m, max(m, F + m)]. An element s
  /// of S* is a sum of two nonzero elements iff s - g lies in S* for some
  /// generator g.
  std::vector<std::uint64_t> minimal_generators() const {
    const auto m = static_cast<std::int64_t>(multiplicity());
    const std::int64_t top = std::max(frobenius() + m, m);
    std::vector<std::uint64_t> out;
    for (std::int64_t s = m; s <= top; ++s) {
      if (!contains_by_apery(s)) continue;
      bool decomposable = false;
      for (auto g : gens_) {
        const auto sg = static_cast<std::int64_t>(g);
        if (sg >= s) break;
        if (contains_by_apery(s - sg)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) out.push_back(static_cast<std::uint64_t>(s));
    }
    return out;
  }

  std::uint64_t embedding_dimension() const { return minimal_generators().size(); }

  /// #{s in S : s < F(S)}, counted per residue class of the Apery table.
  std::uint64_t n_count() const {
    const auto& table = apery_at_multiplicity();
    const std::int64_t f = frobenius();
    std::uint64_t count = 0;
    for (auto w : table.w) {
      const auto sw = static_cast<std::int64_t>(w);
      if (sw < f) count += static_cast<std::uint64_t>((f - 1 - sw) / static_cast<std::int64_t>(table.n)) + 1;
    }
    return count;
  }

  std::vector<std::uint64_t> gaps() const {
    std::vector<std::uint64_t> out;
    const std::int64_t f = frobenius();
    for (std::int64_t x = 1; x <= f; ++x)
      if (!contains_by_apery(x)) out.push_back(static_cast<std::uint64_t>(x));
    return out;
  }

  WilfResult wilf_check() const {
    const auto e = static_cast<std::int64_t>(embedding_dimension());
    const auto n = static_cast<std::int64_t>(n_count());
    const std::int64_t slack = e * n - (frobenius() + 1);
    return {slack >= 0, slack};
  }

  SemigroupSummary summary() const {
    SemigroupSummary s;
    s.frobenius = frobenius();
    s.genus = genus();
    s.multiplicity = multiplicity();
    s.embedding_dimension = embedding_dimension();
    s.n_count = n_count();
    const std::int64_t slack =
        static_cast<std::int64_t>(s.embedding_dimension * s.n_count) - (s.frobenius + 1);
    s.wilf_holds = slack >= 0;
    s.wilf_slack = slack;
    return s;
  }

 private:
  struct Cache {
    std::once_flag apery_once;
    AperyTable apery;
    std::mutex dp_mutex;
    std::shared_ptr<const std::vector<bool>> dp;
  };

  // Reachability flags for at least 0..limit; grows the shared table if needed.
  std::shared_ptr<const std::vector<bool>> reachability(std::uint64_t limit) const {
    std::lock_guard lock(cache_->dp_mutex);
    if (cache_->dp && cache_->dp->size() > limit) return cache_->dp;
    if (limit >= limits_.membership_cells)
      throw Error(ErrorKind::ResourceLimit,
                  "membership table for " + std::to_string(limit) + " exceeds " +
                      std::to_string(limits_.membership_cells) + " cells");
    auto table = std::make_shared<std::vector<bool>>(limit + 1, false);
    auto& reach = *table;
    reach[0] = true;
    for (std::uint64_t v = 1; v <= limit; ++v) {
      for (auto g : gens_) {
        if (g > v) break;
        if (reach[v - g]) {
          reach[v] = true;
          break;
        }
      }
    }
    cache_->dp = table;
    return table;
  }

  std::vector<std::uint64_t> gens_;
  OracleLimits limits_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace fibsg
