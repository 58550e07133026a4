#include "fibsg/fibonacci.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <thread>

using fibsg::CoefficientVector;
using fibsg::Nat;

TEST(Fib, KnownValues) {
  EXPECT_EQ(fibsg::fib(0), 0);
  EXPECT_EQ(fibsg::fib(1), 1);
  EXPECT_EQ(fibsg::fib(2), 1);
  EXPECT_EQ(fibsg::fib(7), 13);
  EXPECT_EQ(fibsg::fib(50), Nat("12586269025"));
}

TEST(Fib, MatchesIterationBeyondMachineWords) {
  for (std::size_t n : {93u, 94u, 150u, 300u}) EXPECT_EQ(fibsg::fib(n), oracle::fib_iterative(n)) << n;
}

TEST(Fib, AdditionFormula) {
  for (std::size_t a = 1; a <= 30; ++a)
    for (std::size_t i = 0; i <= 30; ++i)
      EXPECT_EQ(fibsg::fib(a + i), fibsg::fib(i + 1) * fibsg::fib(a) + fibsg::fib(i) * fibsg::fib(a - 1));
}

TEST(Fib, ConcurrentReadersSeeConsistentValues) {
  std::vector<std::thread> threads;
  std::vector<int> failures(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([t, &failures] {
      for (std::size_t n = 400 + t; n < 700; n += 8)
        if (fibsg::fib(n) != fibsg::fib(n - 1) + fibsg::fib(n - 2)) ++failures[t];
    });
  }
  for (auto& th : threads) th.join();
  for (int f : failures) EXPECT_EQ(f, 0);
}

TEST(Zeckendorf, PaperExamples) {
  auto z = fibsg::zeckendorf(12);
  EXPECT_EQ(z.indices, (std::vector<std::size_t>{2, 4, 6}));
  EXPECT_EQ(z.beta(), 3u);
  EXPECT_EQ(z.gamma(), 6u);

  z = fibsg::zeckendorf(1);
  EXPECT_EQ(z.indices, (std::vector<std::size_t>{2}));
  EXPECT_EQ(z.beta(), 1u);
  EXPECT_EQ(z.gamma(), 2u);

  z = fibsg::zeckendorf(0);
  EXPECT_TRUE(z.indices.empty());
  EXPECT_EQ(z.beta(), 0u);
  EXPECT_EQ(z.gamma(), 0u);
}

TEST(Zeckendorf, StructuralInvariants) {
  for (std::uint64_t x = 0; x <= 10'000; ++x) {
    const auto z = fibsg::zeckendorf(x);
    Nat sum = 0;
    for (std::size_t i = 0; i < z.indices.size(); ++i) {
      ASSERT_GE(z.indices[i], 2u);
      if (i) ASSERT_GE(z.indices[i], z.indices[i - 1] + 2) << x;
      sum += fibsg::fib(z.indices[i]);
    }
    ASSERT_EQ(sum, x);
    ASSERT_EQ(z.gamma(), fibsg::gamma(x));
  }
}

TEST(Zeckendorf, UniqueAgainstExhaustiveSearch) {
  for (std::uint64_t x = 1; x <= 500; ++x) {
    const auto all = oracle::all_sparse_representations(x);
    ASSERT_EQ(all.size(), 1u) << x;
    ASSERT_EQ(all.front(), fibsg::zeckendorf(x).indices) << x;
  }
}

TEST(Zeckendorf, LargeValue) {
  const Nat x = fibsg::fib(200) - 1;
  const auto z = fibsg::zeckendorf(x);
  EXPECT_EQ(z.beta(), 199u / 2);
  EXPECT_EQ(z.gamma(), 199u);
}

TEST(Beta, Examples) {
  EXPECT_EQ(fibsg::beta(11), 2u);
  EXPECT_EQ(fibsg::beta(12), 3u);
  for (std::size_t a = 1; a <= 80; ++a) EXPECT_EQ(fibsg::beta(fibsg::fib(a)), 1u) << a;
}

TEST(Beta, TwelveHasNoLighterRepresentation) {
  // All (b_2..b_6) with sum b_i f_i = 12, smallest weight found exhaustively.
  const std::uint64_t f[] = {1, 2, 3, 5, 8};
  std::uint64_t best = 100;
  for (std::uint64_t b2 = 0; b2 <= 12; ++b2)
    for (std::uint64_t b3 = 0; b3 <= 6; ++b3)
      for (std::uint64_t b4 = 0; b4 <= 4; ++b4)
        for (std::uint64_t b5 = 0; b5 <= 2; ++b5)
          for (std::uint64_t b6 = 0; b6 <= 1; ++b6)
            if (b2 * f[0] + b3 * f[1] + b4 * f[2] + b5 * f[3] + b6 * f[4] == 12)
              best = std::min(best, b2 + b3 + b4 + b5 + b6);
  EXPECT_EQ(best, 3u);
  EXPECT_EQ(fibsg::beta(12), best);
}

TEST(Beta, MinimalAgainstCoinChange) {
  for (std::uint64_t x = 0; x <= 10'000; ++x) {
    const std::size_t g = std::max<std::size_t>(fibsg::gamma(x), 2);
    ASSERT_EQ(fibsg::beta(x), oracle::min_weight(x, g)) << x;
  }
}

TEST(Beta, PeelingTopSummand) {
  for (std::uint64_t x = 1; x <= 10'000; ++x) {
    const std::size_t g = fibsg::gamma(x);
    const Nat rest = Nat(x) - fibsg::fib(g);
    ASSERT_EQ(fibsg::beta(x), fibsg::beta(rest) + 1) << x;
    ASSERT_LE(fibsg::gamma(rest) + 2, g) << x;
  }
}

TEST(Beta, BoundedByHalfGamma) {
  for (std::uint64_t x = 0; x <= 100'000; ++x) ASSERT_LE(fibsg::beta(x), fibsg::gamma(x) / 2) << x;
}

TEST(Beta, FibMinusOne) {
  for (std::size_t a = 1; a <= 60; ++a) EXPECT_EQ(fibsg::beta(fibsg::fib(a) - 1), (a - 1) / 2) << a;
}

TEST(Gamma, Examples) {
  EXPECT_EQ(fibsg::gamma(12), 6u);
  EXPECT_EQ(fibsg::gamma(0), 0u);
  EXPECT_EQ(fibsg::gamma(1), 2u);
  EXPECT_EQ(fibsg::gamma(13), 7u);
  EXPECT_EQ(fibsg::gamma(20), 7u);
  EXPECT_EQ(fibsg::gamma(21), 8u);
}

TEST(MinWeightOracle, Examples) {
  EXPECT_EQ(oracle::min_weight(12, 6), 3u);
  EXPECT_EQ(oracle::min_weight(0, 2), 0u);
  EXPECT_EQ(oracle::min_weight(33, 8), 4u);
  EXPECT_THROW(oracle::min_weight(oracle::kMinWeightBound + 1, 10), std::out_of_range);
}

TEST(ReduceByFib, Examples) {
  EXPECT_EQ(fibsg::reduce_by_fib(CoefficientVector(3, {5})), CoefficientVector(3, {3}));
  EXPECT_EQ(fibsg::reduce_by_fib(CoefficientVector(4, {3, 0})), CoefficientVector(4, {0, 0}));
  EXPECT_EQ(fibsg::reduce_by_fib(CoefficientVector(7, {0, 0, 0, 1, 1})), CoefficientVector::zero(7));
}

TEST(ReduceByFib, RejectsValueBelowFa) {
  EXPECT_THROW(fibsg::reduce_by_fib(CoefficientVector(7, {1, 1, 1, 1, 0})), fibsg::Error);
  EXPECT_THROW(CoefficientVector(5, {1, 2}), fibsg::Error);
  EXPECT_THROW(CoefficientVector(2, {}), fibsg::Error);
}

TEST(ReduceByFib, AThreeUsesTheOnlyCoefficient) {
  // value(v) = b_2 >= f_3 = 2
  for (int b2 = 2; b2 < 20; ++b2) {
    const auto c = fibsg::reduce_by_fib(CoefficientVector(3, {b2}));
    EXPECT_EQ(c[2], b2 - 2);
  }
}

namespace {

// Calls visit(v) for every coefficient vector of length `slots` with weight <= max_weight.
template <typename Visit>
void for_each_vector(std::size_t slots, int max_weight, Visit&& visit) {
  std::vector<Nat> v(slots, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == slots) {
      visit(v);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      v[i] = c;
      self(self, i + 1, left - c);
    }
    v[i] = 0;
  };
  rec(rec, 0, max_weight);
}

}  // namespace

TEST(ReduceByFib, ValueAndWeightProperty) {
  std::size_t checked = 0;
  for (std::size_t a = 3; a <= 12; ++a) {
    for_each_vector(a - 2, 6, [&](const std::vector<Nat>& coeffs) {
      const CoefficientVector v(a, coeffs);
      if (v.value() < fibsg::fib(a)) return;
      const auto c = fibsg::reduce_by_fib(v);
      ASSERT_EQ(c.ambient(), a);
      ASSERT_EQ(c.value(), v.value() - fibsg::fib(a));
      ASSERT_LT(c.weight(), v.weight());
      for (auto x : c.coefficients()) ASSERT_GE(x, 0);
      ++checked;
    });
  }
  EXPECT_GT(checked, 1000u);
}

TEST(ReduceByFib, RandomHeavyVectors) {
  std::mt19937_64 rng(20240611);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::size_t a = 3 + rng() % 40;
    std::vector<Nat> coeffs(a - 2);
    for (auto& c : coeffs) c = rng() % 4 == 0 ? Nat(rng() % 50) : Nat(0);
    coeffs[rng() % coeffs.size()] += fibsg::fib(a);  // guarantees value >= f_a
    const CoefficientVector v(a, coeffs);
    const auto c = fibsg::reduce_by_fib(v);
    ASSERT_EQ(c.value() + fibsg::fib(a), v.value());
    ASSERT_LT(c.weight(), v.weight());
  }
}
