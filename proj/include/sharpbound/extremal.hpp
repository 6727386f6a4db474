// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>

#include "sharpbound/bounds.hpp"
#include "sharpbound/distribution.hpp"
#include "sharpbound/interval.hpp"

namespace sharpbound {

/// A zero-mean unit-variance distribution whose exclusion mass equals
/// bound(interval).value.
inline DiscreteDistribution extremal_distribution(const IntervalSpec& interval) {
  const double a = interval.a();
  const double b = interval.b();
  switch (classify_case(interval)) {
    case BoundCase::DegenerateOne: {
      // Two atoms, both outside (-a, b). sqrt(a/b) >= a and sqrt(b/a) >= b
      // hold exactly when ab <= 1; the max only absorbs rounding at ab == 1.
      const double left = std::max(std::sqrt(a / b), a);
      const double right = std::max(std::sqrt(b / a), b);
      const double s = a + b;
      return DiscreteDistribution::from_atoms({{-left, b / s}, {right, a / s}});
    }
    case BoundCase::Interpolated: {
      const double d = a - b;
      const double s2 = (a + b) * (a + b);
      return DiscreteDistribution::from_atoms({
          {-a, (2.0 - d * b) / s2},
          {-0.5 * d, 4.0 * (a * b - 1.0) / s2},
          {b, (2.0 + d * a) / s2},
      });
    }
    case BoundCase::CantelliLike: {
      const double b2 = b * b;
      return DiscreteDistribution::from_atoms({{-1.0 / b, b2 / (1.0 + b2)}, {b, 1.0 / (1.0 + b2)}});
    }
  }
  return {};
}

}  // namespace sharpbound
