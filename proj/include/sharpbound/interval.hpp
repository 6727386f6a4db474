// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "sharpbound/errors.hpp"

namespace sharpbound {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// The open interval (-a, b) around zero in canonical orientation a >= b.
///
/// Only the left magnitude may be infinite; the one-sided interval
/// (-inf, b) is the Cantelli limit. `reflected()` records whether the
/// caller's interval had to be mirrored through X -> -X to reach this form.
class IntervalSpec;
inline IntervalSpec canonicalize(double left_magnitude, double right);
inline IntervalSpec standardize(double lower, double upper, double mean, double variance);

class IntervalSpec {
 public:
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  bool reflected() const noexcept { return reflected_; }
  bool one_sided() const noexcept { return std::isinf(a_); }

  /// True when x lies in the excluded set {x <= -a} u {x >= b}.
  bool excludes(double x) const noexcept { return x <= -a_ || x >= b_; }

  friend bool operator==(const IntervalSpec&, const IntervalSpec&) = default;

 private:
  IntervalSpec(double a, double b, bool reflected) noexcept
      : a_(a), b_(b), reflected_(reflected) {}

  double a_;
  double b_;
  bool reflected_;

  friend IntervalSpec canonicalize(double left_magnitude, double right);
  friend IntervalSpec standardize(double lower, double upper, double mean, double variance);
};

/// Map the interval (-left_magnitude, right) to canonical orientation.
///
/// The exclusion probability is invariant under X -> -X, so swapping the
/// endpoints gives the same bound. `right` must be finite.
inline IntervalSpec canonicalize(double left_magnitude, double right) {
  if (std::isnan(left_magnitude) || std::isnan(right)) {
    throw DomainError("interval endpoints must not be NaN");
  }
  if (!(left_magnitude > 0.0) || !(right > 0.0)) {
    throw DomainError("interval endpoints must be positive (the interval must contain 0)");
  }
  if (std::isinf(right)) {
    if (std::isinf(left_magnitude)) {
      throw DomainError("at most one interval endpoint may be infinite");
    }
    throw DomainError("only the left endpoint may be infinite; reflect the interval first");
  }
  if (left_magnitude >= right) {
    return IntervalSpec(left_magnitude, right, false);
  }
  return IntervalSpec(right, left_magnitude, true);
}

/// Which branch of the three-case bound applies.
enum class BoundCase { DegenerateOne, Interpolated, CantelliLike };

inline std::string_view to_string(BoundCase c) noexcept {
  switch (c) {
    case BoundCase::DegenerateOne:
      return "DegenerateOne";
    case BoundCase::Interpolated:
      return "Interpolated";
    case BoundCase::CantelliLike:
      return "CantelliLike";
  }
  return "Unknown";
}

/// Boundaries are resolved with exact comparisons, tested in the order
/// a*b <= 1, then (a-b)*b <= 2. The bound is continuous across them.
inline BoundCase classify_case(const IntervalSpec& interval) noexcept {
  const double a = interval.a();
  const double b = interval.b();
  if (std::isinf(a)) return BoundCase::CantelliLike;
  if (a * b <= 1.0) return BoundCase::DegenerateOne;
  if ((a - b) * b <= 2.0) return BoundCase::Interpolated;
  return BoundCase::CantelliLike;
}

/// Reduce P(Y not in (lower, upper)) for Y with the given mean and variance
/// to the zero-mean unit-variance setting.
///
/// At most one endpoint may be infinite. An infinite upper endpoint is
/// reflected so that the infinite side ends up on the left.
inline IntervalSpec standardize(double lower, double upper, double mean, double variance) {
  if (std::isnan(lower) || std::isnan(upper) || std::isnan(mean) || std::isnan(variance)) {
    throw DomainError("standardize: inputs must not be NaN");
  }
  if (!(variance > 0.0) || std::isinf(variance)) {
    throw DomainError("standardize: variance must be positive and finite");
  }
  if (std::isinf(mean)) {
    throw DomainError("standardize: mean must be finite");
  }
  if (std::isinf(lower) && std::isinf(upper)) {
    throw DomainError("standardize: at most one endpoint may be infinite");
  }
  if (!(lower < mean && mean < upper)) {
    throw DomainError("interval must contain the mean");
  }
  const double sigma = std::sqrt(variance);
  const double left = (mean - lower) / sigma;
  const double right = (upper - mean) / sigma;
  if (std::isinf(right)) {
    const IntervalSpec canonical = canonicalize(right, left);
    return IntervalSpec(canonical.a(), canonical.b(), true);
  }
  return canonicalize(left, right);
}

}  // namespace sharpbound
