// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "sharpbound/bounds.hpp"
#include "test_support.hpp"

using namespace sharpbound;

TEST(Bound, QuotedValues) {
  EXPECT_DOUBLE_EQ(bound(canonicalize(1, 1)).value, 1.0);
  EXPECT_NEAR(bound(canonicalize(2, 1)).value, 5.0 / 9.0, 1e-15);
  EXPECT_NEAR(bound(canonicalize(3, 1)).value, 0.5, 1e-15);
  EXPECT_NEAR(bound(canonicalize(kInfinity, 1)).value, 0.5, 1e-15);
}

TEST(Bound, ResultCarriesCaseAndInterval) {
  const BoundResult r = bound(canonicalize(1, 2));
  EXPECT_EQ(r.bound_case, BoundCase::Interpolated);
  EXPECT_EQ(r.interval.a(), 2);
  EXPECT_TRUE(r.interval.reflected());
}

TEST(AlwaysBound, Examples) {
  EXPECT_NEAR(always_bound(canonicalize(2, 1)), 5.0 / 9.0, 1e-15);
  EXPECT_EQ(always_bound(canonicalize(0.5, 0.5)), 1.0);
  // (4 + 9) / 25, strictly above the Cantelli-like value 1/2.
  EXPECT_NEAR(always_bound(canonicalize(4, 1)), 13.0 / 25.0, 1e-15);
  EXPECT_GE(always_bound(canonicalize(4, 1)), bound(canonicalize(4, 1)).value);
  EXPECT_THROW(always_bound(canonicalize(kInfinity, 1)), DomainError);
}

TEST(ClassicalBounds, Examples) {
  EXPECT_EQ(chebyshev_bound(2), 0.25);
  EXPECT_EQ(modified_chebyshev_bound(0.5), 1.0);
  EXPECT_EQ(chebyshev_bound(0.5), 4.0);
  EXPECT_EQ(cantelli_bound(1), 0.5);
  EXPECT_THROW(chebyshev_bound(0), DomainError);
  EXPECT_THROW(modified_chebyshev_bound(-1), DomainError);
  EXPECT_THROW(cantelli_bound(std::nan("")), DomainError);
  EXPECT_THROW(cantelli_bound(kInfinity), DomainError);
}

TEST(ClassicalBounds, AreSpecialCasesOfTheIntervalBound) {
  for (double b : support::log_spaced(0.1, 10, 50)) {
    EXPECT_NEAR(modified_chebyshev_bound(b), bound(canonicalize(b, b)).value, 1e-12) << b;
    EXPECT_NEAR(cantelli_bound(b), bound(canonicalize(kInfinity, b)).value, 1e-12) << b;
  }
}

TEST(BoundProperties, CaseBoundaryContinuity) {
  for (double b : support::log_spaced(0.05, 20, 100)) {
    const double a1 = 1.0 / b;
    if (a1 >= b) {
      EXPECT_NEAR(detail::interpolated_formula(a1, b), 1.0, 1e-12) << b;
    }
    const double a2 = b + 2.0 / b;
    EXPECT_NEAR(detail::interpolated_formula(a2, b), detail::cantelli_formula(b), 1e-12) << b;
  }
}

TEST(BoundProperties, MonotoneInAAndConvergesToCantelli) {
  for (double b : support::log_spaced(0.1, 10, 40)) {
    double previous = bound(canonicalize(b, b)).value;
    EXPECT_NEAR(previous, modified_chebyshev_bound(b), 1e-15);
    for (double k : support::log_spaced(1.0, 1e4, 300)) {
      const double value = bound(canonicalize(k * b, b)).value;
      EXPECT_LE(value, previous + 1e-15) << "b=" << b << " k=" << k;
      previous = value;
    }
    EXPECT_LE(std::abs(bound(canonicalize(1e6, b)).value - cantelli_bound(b)), 1e-6) << b;
  }
}

TEST(BoundProperties, OrderingAndRange) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> log_u(std::log(1e-3), std::log(1e3));
  for (int i = 0; i < 5000; ++i) {
    const IntervalSpec iv = canonicalize(std::exp(log_u(rng)), std::exp(log_u(rng)));
    const double v = bound(iv).value;
    EXPECT_GT(v, 0.0);
    EXPECT_LE(v, 1.0);
    EXPECT_LE(cantelli_bound(iv.b()), v + 1e-15);
    EXPECT_LE(v, always_bound(iv) + 1e-15);
    if (bound(iv).bound_case != BoundCase::CantelliLike) {
      EXPECT_NEAR(v, always_bound(iv), 1e-15);
    }
  }
}

TEST(BoundProperties, ReflectionSymmetry) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> log_u(std::log(1e-2), std::log(1e2));
  for (int i = 0; i < 2000; ++i) {
    const double p = std::exp(log_u(rng));
    const double q = std::exp(log_u(rng));
    EXPECT_EQ(bound(canonicalize(p, q)).value, bound(canonicalize(q, p)).value);
  }
}

TEST(QuadraticEvent, Examples) {
  const QuadraticEventResult r = quadratic_event_bound(1, -2);
  EXPECT_NEAR(r.value, 5.0 / 9.0, 1e-15);
  EXPECT_EQ(r.sharpness, Sharpness::Sharp);
  ASSERT_TRUE(r.roots);
  EXPECT_DOUBLE_EQ(r.roots->first, -2);
  EXPECT_DOUBLE_EQ(r.roots->second, 1);

  const QuadraticEventResult certain = quadratic_event_bound(0, 1);
  EXPECT_EQ(certain.value, 1.0);
  EXPECT_EQ(certain.sharpness, Sharpness::Sharp);
  EXPECT_FALSE(certain.roots);

  const QuadraticEventResult symmetric = quadratic_event_bound(0, -1);
  EXPECT_EQ(symmetric.value, 1.0);
  EXPECT_EQ(symmetric.sharpness, Sharpness::Sharp);

  const QuadraticEventResult outside = quadratic_event_bound(5, 4);
  EXPECT_EQ(outside.value, 1.0);
  EXPECT_EQ(outside.sharpness, Sharpness::ValidNotSharp);
  ASSERT_TRUE(outside.roots);
  EXPECT_DOUBLE_EQ(outside.roots->first, -4);
  EXPECT_DOUBLE_EQ(outside.roots->second, -1);
}

TEST(QuadraticEvent, EdgeCases) {
  // Double root: (X + 1)^2 >= 0 always.
  EXPECT_EQ(quadratic_event_bound(2, 1).sharpness, Sharpness::Sharp);
  // B == 0: 0 is a root, the open root interval does not contain 0.
  EXPECT_EQ(quadratic_event_bound(3, 0).sharpness, Sharpness::ValidNotSharp);
  EXPECT_THROW(quadratic_event_bound(std::nan(""), 1), DomainError);
  EXPECT_THROW(quadratic_event_bound(1, kInfinity), DomainError);
}

TEST(QuadraticEvent, MatchesTextbookRootsWhenBNegative) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coef(-10, 10);
  for (int i = 0; i < 2000; ++i) {
    const double A = coef(rng);
    const double B = -std::abs(coef(rng)) - 1e-3;
    const double s = std::sqrt(A * A - 4 * B);
    const double r1 = (-A - s) / 2;
    const double r2 = (-A + s) / 2;
    const QuadraticEventResult r = quadratic_event_bound(A, B);
    ASSERT_TRUE(r.reduced);
    EXPECT_EQ(r.sharpness, Sharpness::Sharp);
    EXPECT_NEAR(r.roots->first, r1, 1e-9 * (1 + std::abs(r1)));
    EXPECT_NEAR(r.roots->second, r2, 1e-9 * (1 + std::abs(r2)));
    EXPECT_NEAR(r.value, bound(canonicalize(-r1, r2)).value, 1e-9);
  }
}

TEST(QuadraticEvent, StableForSmallRoot) {
  // Roots -1e8 and 1e-8: the naive formula loses the small root entirely.
  const QuadraticEventResult r = quadratic_event_bound(1e8 - 1e-8, -1.0);
  ASSERT_TRUE(r.roots);
  EXPECT_NEAR(r.roots->second, 1e-8, 1e-20);
  EXPECT_NEAR(r.roots->first, -1e8, 1e-6);
}
