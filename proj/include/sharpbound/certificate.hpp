// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>

#include "sharpbound/bounds.hpp"
#include "sharpbound/interval.hpp"

namespace sharpbound {

/// f(x) = c0 + c1 x + c2 x^2, used as a majorant of the exclusion indicator.
/// Under E X = 0 and E X^2 = 1 its expectation is c0 + c2.
struct QuadraticCertificate {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;

  double operator()(double x) const noexcept { return c0 + x * (c1 + x * c2); }
  double objective() const noexcept { return c0 + c2; }

  /// f >= 0 on the real line, with relative slack `tol` on the discriminant.
  bool nonnegative(double tol = 1e-12) const noexcept {
    if (c2 < 0.0) return false;
    if (c2 == 0.0) return std::abs(c1) <= tol && c0 >= 0.0;
    const double lhs = c1 * c1;
    const double rhs = 4.0 * c0 * c2;
    return lhs <= rhs + tol * std::max(lhs, rhs);
  }
};

/// The optimal majorant for the case of `interval`: 1, ((2x + a - b)/(a + b))^2,
/// or ((b x + 1)/(b^2 + 1))^2, expanded into coefficients.
inline QuadraticCertificate certificate(const IntervalSpec& interval) noexcept {
  const double a = interval.a();
  const double b = interval.b();
  switch (classify_case(interval)) {
    case BoundCase::DegenerateOne:
      return {1.0, 0.0, 0.0};
    case BoundCase::Interpolated: {
      const double d = a - b;
      const double s2 = (a + b) * (a + b);
      return {d * d / s2, 4.0 * d / s2, 4.0 / s2};
    }
    case BoundCase::CantelliLike: {
      const double n = 1.0 + b * b;
      const double n2 = n * n;
      return {1.0 / n2, 2.0 * b / n2, b * b / n2};
    }
  }
  return {};
}

}  // namespace sharpbound
