#pragma once

// Fibonacci numbers (f_0 = 0, f_1 = 1), Zeckendorf decompositions and the
// summand statistics built on them. Indices of a decomposition start at 2,
// so the value 1 is always f_2.

#include "fibsg/bigint.hpp"
#include "fibsg/error.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

namespace fibsg {

/// Process-wide append-only memo of Fibonacci numbers. Entries are never
/// modified once written, so references handed out stay valid for the life of
/// the program; growth happens under an exclusive lock.
class FibonacciTable {
 public:
  static FibonacciTable& instance() {
    static FibonacciTable table;
    return table;
  }

  const Nat& at(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    grow_to(n + 1);
    std::shared_lock lock(mutex_);
    return values_[n];
  }

  // Largest l with f_l <= x, for x >= 1. Because f_1 = f_2 the answer is
  // always at least 2.
  std::size_t largest_index_not_exceeding(const Nat& x) {
    for (;;) {
      {
        std::shared_lock lock(mutex_);
        if (values_.back() > x) {
          auto it = std::upper_bound(values_.begin(), values_.end(), x);
          return static_cast<std::size_t>(it - values_.begin()) - 1;
        }
      }
      std::size_t target;
      {
        std::shared_lock lock(mutex_);
        target = values_.size() * 2;
      }
      grow_to(target);
    }
  }

 private:
  FibonacciTable() = default;

  void grow_to(std::size_t size) {
    std::unique_lock lock(mutex_);
    while (values_.size() < size) {
      const std::size_t k = values_.size();
      values_.push_back(values_[k - 1] + values_[k - 2]);
    }
  }

  std::shared_mutex mutex_;
  std::deque<Nat> values_{Nat(0), Nat(1)};
};

inline const Nat& fib(std::size_t n) { return FibonacciTable::instance().at(n); }

/// gamma(x): largest index l with f_l <= x; 0 for x = 0, 2 for x = 1.
inline std::size_t gamma(const Nat& x) {
  if (x <= 0) return 0;
  return FibonacciTable::instance().largest_index_not_exceeding(x);
}

struct ZeckendorfDecomposition {
  Nat x;
  std::vector<std::size_t> indices;  // strictly increasing, >= 2, never adjacent

  std::size_t beta() const { return indices.size(); }
  std::size_t gamma() const { return indices.empty() ? 0 : indices.back(); }
};

/// Greedy decomposition: repeatedly remove the largest Fibonacci number not
/// exceeding the remainder. The remainder after removing f_l is below f_{l-1},
/// which is what keeps the chosen indices non-adjacent.
inline ZeckendorfDecomposition zeckendorf(const Nat& x) {
  if (x < 0) throw Error(ErrorKind::PreconditionViolation, "zeckendorf of a negative value");
  ZeckendorfDecomposition out{x, {}};
  Nat rest = x;
  while (rest > 0) {
    const std::size_t l = gamma(rest);
    out.indices.push_back(l);
    rest -= fib(l);
  }
  std::reverse(out.indices.begin(), out.indices.end());
  return out;
}

/// Minimum number of Fibonacci summands (indices >= 2, repetition allowed)
/// adding up to x. Equal to the Zeckendorf summand count.
inline std::size_t beta(const Nat& x) { return zeckendorf(x).beta(); }

/// A coefficient tuple (b_2, ..., b_{a-1}) standing for sum b_i * f_i.
class CoefficientVector {
 public:
  CoefficientVector(std::size_t a, std::vector<Nat> coeffs) : a_(a), coeffs_(std::move(coeffs)) {
    if (a_ < 3) throw Error(ErrorKind::PreconditionViolation, "coefficient vector needs a >= 3");
    if (coeffs_.size() != a_ - 2)
      throw Error(ErrorKind::PreconditionViolation,
                  "expected " + std::to_string(a_ - 2) + " coefficients, got " +
                      std::to_string(coeffs_.size()));
    for (const auto& c : coeffs_)
      if (c < 0) throw Error(ErrorKind::PreconditionViolation, "negative coefficient");
  }

  static CoefficientVector zero(std::size_t a) {
    return CoefficientVector(a, std::vector<Nat>(a >= 2 ? a - 2 : 0, Nat(0)));
  }

  std::size_t ambient() const { return a_; }

  // Indexed by Fibonacci index, 2 <= i <= a-1.
  const Nat& operator[](std::size_t i) const { return coeffs_.at(i - 2); }
  Nat& operator[](std::size_t i) { return coeffs_.at(i - 2); }

  std::span<const Nat> coefficients() const { return coeffs_; }

  Nat value() const {
    Nat sum = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) sum += coeffs_[i] * fib(i + 2);
    return sum;
  }

  Nat weight() const {
    Nat sum = 0;
    for (const auto& c : coeffs_) sum += c;
    return sum;
  }

  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;

 private:
  std::size_t a_;
  std::vector<Nat> coeffs_;
};

namespace detail {

// b[i - 2] holds b_i for 2 <= i <= a-1. Returns c of the same length with
// value(c) = value(b) - f_a and weight(c) < weight(b).
inline std::vector<Nat> reduce_by_fib(std::size_t a, std::vector<Nat> b) {
  auto at = [&b](std::size_t i) -> Nat& { return b[i - 2]; };

  if (a == 3) {
    at(2) -= fib(3);
    return b;
  }

  // Direct cases: the two top coefficients absorb f_a = f_{a-2} + f_{a-1}, or
  // 2 f_{a-1} = f_a + f_{a-3} when only b_{a-1} is available.
  if (at(a - 2) >= 1 && at(a - 1) >= 1) {
    at(a - 2) -= 1;
    at(a - 1) -= 1;
    return b;
  }
  if (at(a - 2) == 0 && at(a - 1) >= 2) {
    // For a = 4 the index a-3 = 1 does not exist; f_1 = f_2 so it lands on 2.
    at(std::max<std::size_t>(a - 3, 2)) += 1;
    at(a - 1) -= 2;
    return b;
  }

  if (a == 4) {
    // Remaining case is (k, 0) with k >= 3.
    at(2) -= 3;
    return b;
  }

  if (at(a - 2) >= 1 && at(a - 1) == 0) {
    std::vector<Nat> lower(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(a - 3));
    lower.back() -= 1;
    auto c = reduce_by_fib(a - 1, std::move(lower));
    c.push_back(0);
    return c;
  }
  if (at(a - 2) == 0 && at(a - 1) == 1) {
    std::vector<Nat> lower(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(a - 4));
    auto c = reduce_by_fib(a - 2, std::move(lower));
    c.push_back(0);
    c.push_back(0);
    return c;
  }
  // b_{a-2} = b_{a-1} = 0: remove f_{a-2} from the lower part, then f_{a-1}.
  std::vector<Nat> lower(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(a - 4));
  auto mid = reduce_by_fib(a - 2, std::move(lower));
  mid.push_back(0);
  auto c = reduce_by_fib(a - 1, std::move(mid));
  c.push_back(0);
  return c;
}

}  // namespace detail

/// Rewrites v as f_a plus a strictly lighter coefficient vector and returns
/// that lighter vector. Requires value(v) >= f_a.
inline CoefficientVector reduce_by_fib(const CoefficientVector& v) {
  const std::size_t a = v.ambient();
  if (v.value() < fib(a))
    throw Error(ErrorKind::PreconditionViolation,
                "reduce_by_fib needs value >= f_" + std::to_string(a));
  std::vector<Nat> b(v.coefficients().begin(), v.coefficients().end());
  return CoefficientVector(a, detail::reduce_by_fib(a, std::move(b)));
}

}  // namespace fibsg
