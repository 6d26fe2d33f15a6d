// Copyright 2026 The sdmm-pre Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <cstdint>
#include <optional>

#include <gtest/gtest.h>

#include "oracles.h"
#include "sdmm/degree_table.h"
#include "sdmm/error.h"
#include "sdmm/rational.h"
#include "sdmm/scheme_formulas.h"

namespace sdmm {
namespace {

std::int64_t Enumerated(std::int64_t k, std::int64_t l, std::int64_t t,
                        std::int64_t r) {
  const auto e = testing::GaspByScan(k, l, t, r);
  return testing::CountByEnumeration(e.ai, e.ar, e.bi, e.br).n_pre;
}

std::int64_t EnumeratedSymmetric(std::int64_t k, std::int64_t l,
                                 std::int64_t t, std::int64_t r) {
  std::optional<std::int64_t> best;
  if (r <= std::min(k, t)) best = Enumerated(k, l, t, r);
  if (r <= std::min(l, t)) {
    const auto other = Enumerated(l, k, t, r);
    best = best ? std::min(*best, other) : other;
  }
  return *best;
}

template <typename Fn>
void ForEachKLT(Fn&& fn) {
  for (std::int64_t k = 1; k <= 8; ++k) {
    for (std::int64_t l = 1; l <= 8; ++l) {
      for (std::int64_t t = 1; t <= 16; ++t) fn(k, l, t);
    }
  }
}

TEST(FloorDivTest, RoundsTowardNegativeInfinity) {
  EXPECT_EQ(FloorDiv(-1, 4), -1);
  EXPECT_EQ(FloorDiv(-4, 4), -1);
  EXPECT_EQ(FloorDiv(-5, 4), -2);
  EXPECT_EQ(FloorDiv(7, 2), 3);
  EXPECT_EQ(FloorDiv(0, 3), 0);
  EXPECT_THROW(FloorDiv(1, 0), Error);
}

TEST(DecomposeTest, EuclideanIdentities) {
  ForEachKLT([](auto k, auto l, auto t) {
    for (std::int64_t r = 1; r <= std::min(k, t); ++r) {
      const GasprDecomposition d = Decompose({k, l, t, r});
      ASSERT_EQ(t, d.u * r + d.r0);
      ASSERT_TRUE(0 <= d.r0 && d.r0 < r);
      ASSERT_EQ(k + t - 1, d.v * k + d.k0);
      ASSERT_TRUE(0 <= d.k0 && d.k0 < k);
      ASSERT_EQ(d.w, l + d.u - 1);
    }
  });
}

TEST(ClosedFormTest, PublishedValues) {
  EXPECT_EQ(PrecomputeServersClosedForm({4, 4, 4, 1}), 28);
  EXPECT_EQ(PrecomputeServersClosedForm({4, 4, 4, 2}), 29);
  EXPECT_EQ(PrecomputeServersClosedForm({4, 4, 11, 1}), 40);
  EXPECT_EQ(PrecomputeServersClosedForm({4, 4, 11, 4}), 39);
  for (std::int64_t r = 1; r <= 3; ++r) {
    EXPECT_EQ(PrecomputeServersClosedForm({3, 3, 5, r}), 20) << r;
  }
}

TEST(ClosedFormProperty, MatchesEnumerationOracle) {
  ForEachKLT([](auto k, auto l, auto t) {
    for (std::int64_t r = 1; r <= std::min(k, t); ++r) {
      ASSERT_EQ(PrecomputeServersClosedForm({k, l, t, r}), Enumerated(k, l, t, r))
          << k << "," << l << "," << t << "," << r;
    }
  });
}

TEST(SpecializedFormulaTest, Examples) {
  EXPECT_EQ(SmallPrecomputeServers(4, 4, 4), 28);
  EXPECT_EQ(SmallPrecomputeServers(4, 4, 11), 40);
  EXPECT_EQ(SmallPrecomputeServers(1, 1, 1), 2);
  EXPECT_EQ(BigPrecomputeServers(4, 4, 11), 39);
  EXPECT_EQ(BigPrecomputeServers(4, 4, 4), 32);
  EXPECT_EQ(BigPrecomputeServers(3, 1, 5), 10);
  EXPECT_EQ(PrecomputeServersClosedForm({4, 4, 4, 4}), 32);
  EXPECT_EQ(BigPrecomputeServersSymmetric(3, 5, 4), std::nullopt);
  EXPECT_EQ(BigPrecomputeServersSymmetric(3, 5, 5), 2 * 15 - 5 + 5);
}

TEST(SpecializedFormulaProperty, EndpointsOfTheChainFamily) {
  ForEachKLT([](auto k, auto l, auto t) {
    ASSERT_EQ(SmallPrecomputeServers(k, l, t), Enumerated(k, l, t, 1));
    ASSERT_EQ(BigPrecomputeServers(k, l, t), Enumerated(k, l, t, std::min(k, t)));
    ASSERT_EQ(SmallPrecomputeServersSymmetric(k, l, t),
              EnumeratedSymmetric(k, l, t, 1));
    const auto big = BigPrecomputeServersSymmetric(k, l, t);
    if (big) {
      // Better of the two orientations, each with r = min(rows, T).
      ASSERT_EQ(*big, std::min(Enumerated(k, l, t, std::min(k, t)),
                               Enumerated(l, k, t, std::min(l, t))))
          << k << "," << l << "," << t;
    }
  });
}

TEST(CompareTest, Examples) {
  EXPECT_EQ(CompareSmallBig(4, 4, 21), Verdict::kBigWins);
  EXPECT_EQ(CompareSmallBig(4, 4, 20), Verdict::kUndetermined);
  EXPECT_EQ(CompareSmallBig(4, 4, 3), Verdict::kSmallWins);
  EXPECT_EQ(CompareSmallBig(2, 2, 2), Verdict::kTie);
  EXPECT_EQ(CompareSmallBig(1, 7, 9), Verdict::kTie);
  EXPECT_EQ(CompareSmallBig(5, 3, 1), Verdict::kTie);
  EXPECT_EQ(VerdictName(Verdict::kBigWins), "BigWins");
}

TEST(CompareProperty, VerdictsAgreeWithCounts) {
  int decided = 0;
  ForEachKLT([&](auto k, auto l, auto t) {
    const Verdict v = CompareSmallBig(k, l, t);
    if (v == Verdict::kUndetermined) return;
    ++decided;
    const std::int64_t small = SmallPrecomputeServersSymmetric(k, l, t);
    const auto big = BigPrecomputeServersSymmetric(k, l, t);
    ASSERT_TRUE(big.has_value()) << k << "," << l << "," << t;
    switch (v) {
      case Verdict::kTie:
        ASSERT_EQ(small, *big);
        break;
      case Verdict::kSmallWins:
        ASSERT_LT(small, *big);
        break;
      case Verdict::kBigWins:
        ASSERT_GT(small, *big);
        break;
      case Verdict::kUndetermined:
        break;
    }
  });
  EXPECT_GT(decided, 400);
}

TEST(BoundsTest, Examples) {
  for (std::int64_t t = 1; t <= 15; ++t) {
    EXPECT_EQ(LowerBounds(4, 4, t).bound1, 19 + t);
  }
  const BoundsReport b = LowerBounds(3, 3, 5);
  EXPECT_EQ(b.bound1, 16);
  ASSERT_TRUE(b.bound2.has_value());
  EXPECT_EQ(*b.bound2, 17);
  ASSERT_EQ(b.bound3_by_m.size(), 5u);
  EXPECT_EQ(b.bound3_by_m[0], 16);
  EXPECT_EQ(b.best, 17);
  const BoundsReport one = LowerBounds(1, 1, 1);
  EXPECT_EQ(one.bound1, 2);
  EXPECT_FALSE(one.bound2.has_value());
  EXPECT_EQ(one.bound3_by_m, std::vector<std::int64_t>{2});
  EXPECT_EQ(one.best, 2);
}

// The m = 1 piece of the third bound is at least as strong as the first.
TEST(BoundsProperty, ThirdBoundDominatesFirstAtMOne) {
  ForEachKLT([](auto k, auto l, auto t) {
    const BoundsReport b = LowerBounds(k, l, t);
    if (t < std::min(k, l)) {
      ASSERT_GT(b.bound3_by_m[0], b.bound1);
    } else {
      ASSERT_EQ(b.bound3_by_m[0], b.bound1);
    }
  });
}

TEST(BoundsProperty, BoundsBelowEveryChainLength) {
  ForEachKLT([](auto k, auto l, auto t) {
    const std::int64_t best = LowerBounds(k, l, t).best;
    for (std::int64_t r = 1; r <= std::min(k, t); ++r) {
      ASSERT_LE(best, Enumerated(k, l, t, r));
    }
  });
}

TEST(OptimalityTest, Examples) {
  EXPECT_TRUE(OptimalityCheck(1, 5, 7).achieving);
  const Optimality gap = OptimalityCheck(3, 3, 5);
  EXPECT_FALSE(gap.achieving);
  EXPECT_EQ(gap.gap, 3);
  EXPECT_TRUE(OptimalityCheck(2, 2, 2).achieving);
  EXPECT_TRUE(SmallClaimedOptimal(4, 4, 2));
  EXPECT_FALSE(SmallClaimedOptimal(4, 4, 3));
}

// Optimality holds for K = 1, L = 1, T = 1, and T = 2 when min(K, L) <= 2.
TEST(OptimalityProperty, ThinPartitionsAchieveTheBound) {
  ForEachKLT([](auto k, auto l, auto t) {
    if (k == 1 || l == 1 || t == 1 || (t == 2 && std::min(k, l) <= 2)) {
      ASSERT_TRUE(OptimalityCheck(k, l, t).achieving)
          << k << "," << l << "," << t;
    }
  });
}

// For T = 2 and min(K, L) >= 3 the symmetric small scheme sits one above
// the best bound; the count comes from the enumeration oracle.
TEST(OptimalityProperty, TwoColludersWideGrid) {
  for (std::int64_t k = 3; k <= 8; ++k) {
    for (std::int64_t l = 3; l <= 8; ++l) {
      ASSERT_EQ(EnumeratedSymmetric(k, l, 2, 1), k * l + k + l);
      ASSERT_EQ(LowerBounds(k, l, 2).best, k * l + k + l - 1);
      ASSERT_EQ(OptimalityCheck(k, l, 2).gap, 1);
    }
  }
}

TEST(CollusionTest, Examples) {
  const auto nopre = CollusionTolerance(2, 2, ParseRational("0.6"), false);
  EXPECT_FALSE(nopre.feasible);
  EXPECT_FALSE(nopre.servers.has_value());
  const auto pre = CollusionTolerance(2, 2, ParseRational("0.6"), true);
  EXPECT_TRUE(pre.feasible);
  EXPECT_EQ(*pre.threshold, Rational(15));
  EXPECT_EQ(*pre.servers, 15);
  const auto zero = CollusionTolerance(2, 2, Rational(0), true);
  EXPECT_EQ(*zero.threshold, Rational(6));
  const auto half = CollusionTolerance(2, 2, Rational(1, 2), true);
  EXPECT_EQ(*half.threshold, Rational(12));
  EXPECT_FALSE(CollusionTolerance(2, 2, Rational(1, 2), false).feasible);
  const auto third = CollusionTolerance(2, 3, Rational(1, 3), false);
  EXPECT_EQ(*third.threshold, Rational(33));
  try {
    CollusionTolerance(2, 2, Rational(1), true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidFraction);
  }
}

// The threshold solves the defining equation N = f(T) with T = delta N.
TEST(CollusionProperty, ThresholdSolvesServerEquation) {
  testing::Gen gen(17);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t k = gen.Int(1, 10);
    const std::int64_t l = gen.Int(1, 10);
    const Rational delta(gen.Int(0, 98), 100);
    const auto pre = CollusionTolerance(k, l, delta, true);
    ASSERT_TRUE(pre.feasible);
    const Rational n = *pre.threshold;
    ASSERT_EQ(n, Rational(2 * k * l - std::max(k, l)) + delta * n);
    ASSERT_GE(Rational(*pre.servers), n);
    ASSERT_LT(Rational(*pre.servers - 1), n);
    const auto nopre = CollusionTolerance(k, l, delta, false);
    ASSERT_EQ(nopre.feasible, delta < Rational(1, 2));
    if (nopre.feasible) {
      const Rational m = *nopre.threshold;
      ASSERT_EQ(m, Rational(2 * k * l - 1) + Rational(2) * delta * m);
    }
  }
}

TEST(ComplexityTest, OptimalExponents) {
  ComplexityParams cp;
  const auto nopre = ComplexityExponent(cp, false);
  EXPECT_EQ(nopre.optimal_exponent, Rational(13, 5));
  EXPECT_EQ(nopre.optimal_epsilon, Rational(1, 5));
  const auto pre = ComplexityExponent(cp, true);
  EXPECT_EQ(pre.optimal_exponent, Rational(5, 2));
  EXPECT_EQ(pre.optimal_epsilon, Rational(1, 4));
  cp.omega = Rational(2);
  EXPECT_EQ(ComplexityExponent(cp, false).optimal_exponent, Rational(2));
  EXPECT_EQ(ComplexityExponent(cp, true).optimal_exponent, Rational(2));
  EXPECT_EQ(ComplexityExponent(cp, true).optimal_epsilon, Rational(0));
}

TEST(ComplexityTest, RangeChecks) {
  ComplexityParams cp;
  cp.delta = Rational(1, 2);
  EXPECT_NO_THROW(ComplexityExponent(cp, true));
  try {
    ComplexityExponent(cp, false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidFraction);
  }
  cp.delta = Rational(0);
  cp.omega = Rational(3, 2);
  EXPECT_THROW(ComplexityExponent(cp, true), Error);
  cp.omega = Rational(3);
  cp.epsilon = Rational(2);
  EXPECT_THROW(ComplexityExponent(cp, true), Error);
}

// At the optimal epsilon the two terms of the max coincide, and the
// optimal exponent is the minimum of the max over a grid of epsilon.
TEST(ComplexityProperty, OptimumBalancesTheTwoTerms) {
  for (int num = 200; num <= 376; num += 11) {
    ComplexityParams cp;
    cp.omega = Rational(num, 100);
    for (bool precompute : {false, true}) {
      const Rational slope = precompute ? Rational(2) : Rational(3);
      cp.epsilon = Rational(0);
      const auto base = ComplexityExponent(cp, precompute);
      const Rational e = base.optimal_epsilon;
      const Rational w = cp.omega;
      ASSERT_EQ(e + w - e * w, Rational(2) + slope * e);
      ASSERT_EQ(base.optimal_exponent, Rational(2) + slope * e);
      for (int g = 0; g <= 100; ++g) {
        cp.epsilon = Rational(g, 100);
        ASSERT_GE(ComplexityExponent(cp, precompute).exponent,
                  base.optimal_exponent);
      }
    }
  }
}

}  // namespace
}  // namespace sdmm
