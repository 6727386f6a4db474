// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string_view>
#include <utility>

#include "sharpbound/errors.hpp"
#include "sharpbound/interval.hpp"

namespace sharpbound {

/// Sharp upper bound on P(X not in (-a, b)) over all zero-mean
/// unit-variance X, with the branch that produced it.
struct BoundResult {
  double value;
  BoundCase bound_case;
  IntervalSpec interval;
};

namespace detail {

inline void require_positive_finite(double b, const char* what) {
  if (std::isnan(b) || !(b > 0.0) || std::isinf(b)) {
    throw DomainError(std::string(what) + ": argument must be positive and finite");
  }
}

// (4 + (a-b)^2) / (a+b)^2
inline double interpolated_formula(double a, double b) noexcept {
  const double d = a - b;
  const double s = a + b;
  return (4.0 + d * d) / (s * s);
}

inline double cantelli_formula(double b) noexcept { return 1.0 / (1.0 + b * b); }

}  // namespace detail

inline BoundResult bound(const IntervalSpec& interval) noexcept {
  const BoundCase c = classify_case(interval);
  double value = 1.0;
  switch (c) {
    case BoundCase::DegenerateOne:
      value = 1.0;
      break;
    case BoundCase::Interpolated:
      value = detail::interpolated_formula(interval.a(), interval.b());
      break;
    case BoundCase::CantelliLike:
      value = detail::cantelli_formula(interval.b());
      break;
  }
  return {value, c, interval};
}

/// min(1, (4 + (a-b)^2) / (a+b)^2), valid in every case and equal to the
/// sharp bound outside the Cantelli-like regime.
inline double always_bound(const IntervalSpec& interval) {
  if (interval.one_sided()) {
    throw DomainError("always_bound: requires a finite left endpoint");
  }
  return std::min(1.0, detail::interpolated_formula(interval.a(), interval.b()));
}

/// P(|X| >= b) <= 1/b^2.
inline double chebyshev_bound(double b) {
  detail::require_positive_finite(b, "chebyshev_bound");
  return 1.0 / (b * b);
}

inline double modified_chebyshev_bound(double b) {
  detail::require_positive_finite(b, "modified_chebyshev_bound");
  return std::min(1.0, 1.0 / (b * b));
}

/// One-sided: P(X >= b) <= 1/(1+b^2).
inline double cantelli_bound(double b) {
  detail::require_positive_finite(b, "cantelli_bound");
  return detail::cantelli_formula(b);
}

enum class Sharpness { Sharp, ValidNotSharp };

inline std::string_view to_string(Sharpness s) noexcept {
  return s == Sharpness::Sharp ? "sharp" : "valid_not_sharp";
}

/// Bound on P(X^2 + A X + B >= 0).
struct QuadraticEventResult {
  double value;
  Sharpness sharpness;
  std::optional<std::pair<double, double>> roots;  // ordered, when real and distinct
  std::optional<BoundResult> reduced;              // when the root interval contains 0
};

/// The event {X^2 + A X + B >= 0} is the complement of (r1, r2) when the
/// discriminant is positive; it reduces to the interval bound exactly when
/// r1 < 0 < r2, i.e. when B < 0.
inline QuadraticEventResult quadratic_event_bound(double A, double B) {
  if (std::isnan(A) || std::isnan(B) || std::isinf(A) || std::isinf(B)) {
    throw DomainError("quadratic_event_bound: coefficients must be finite");
  }
  const double disc = A * A - 4.0 * B;
  if (!(disc > 0.0)) {
    return {1.0, Sharpness::Sharp, std::nullopt, std::nullopt};
  }
  // Larger-magnitude root first, the other from r1 * r2 = B.
  const double q = -0.5 * (A + std::copysign(std::sqrt(disc), A));
  double r1 = q;
  double r2 = B / q;
  if (r1 > r2) std::swap(r1, r2);
  if (B < 0.0) {
    const BoundResult reduced = bound(canonicalize(-r1, r2));
    return {reduced.value, Sharpness::Sharp, std::make_pair(r1, r2), reduced};
  }
  return {1.0, Sharpness::ValidNotSharp, std::make_pair(r1, r2), std::nullopt};
}

}  // namespace sharpbound
