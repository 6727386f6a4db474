// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "sharpbound/errors.hpp"
#include "sharpbound/interval.hpp"

namespace sharpbound::oracle {

/// Uniform grid lo + i (hi - lo) / (steps - 1), i = 0 .. steps - 1.
struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t steps = 0;

  void validate() const {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
      throw DomainError("grid: require finite lo < hi");
    }
    if (steps < 2) {
      throw DomainError("grid: require at least 2 steps");
    }
  }

  double step() const noexcept { return (hi - lo) / static_cast<double>(steps - 1); }

  double point(std::size_t i) const noexcept {
    // Written so that the points of a grid are reproduced bit-exactly by
    // the grid with 2 * steps - 1 points.
    return lo + ((hi - lo) * static_cast<double>(i)) / static_cast<double>(steps - 1);
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// [-3 max(a, sqrt(a/b), 1), 3 max(b, sqrt(b/a), 1)] with 2001 points.
/// Covers every extremal atom in all three cases.
inline GridSpec default_grid(const IntervalSpec& interval) {
  if (interval.one_sided()) {
    throw DomainError("default_grid: requires a finite left endpoint");
  }
  const double a = interval.a();
  const double b = interval.b();
  const double left = std::max({a, std::sqrt(a / b), 1.0});
  const double right = std::max({b, std::sqrt(b / a), 1.0});
  return {-3.0 * left, 3.0 * right, 2001};
}

/// Grid points merged with `forced` points, sorted ascending.
///
/// A regular point closer than 1e-3 step to a forced point is replaced by
/// it, so forced locations appear exactly and points stay well separated.
inline std::vector<double> grid_points(const GridSpec& grid, std::span<const double> forced = {}) {
  grid.validate();
  const double min_gap = 1e-3 * grid.step();

  std::vector<double> extra;
  for (double x : forced) {
    if (std::isfinite(x)) extra.push_back(x);
  }
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());

  std::vector<double> out;
  out.reserve(grid.steps + extra.size());
  std::size_t f = 0;
  for (std::size_t i = 0; i < grid.steps; ++i) {
    const double x = grid.point(i);
    while (f < extra.size() && extra[f] < x - min_gap) {
      out.push_back(extra[f++]);
    }
    bool replaced = false;
    while (f < extra.size() && std::abs(extra[f] - x) <= min_gap) {
      if (!replaced) out.push_back(extra[f]);
      replaced = true;
      ++f;
    }
    if (!replaced) out.push_back(x);
  }
  while (f < extra.size()) out.push_back(extra[f++]);

  // Forced points closer to each other than min_gap collapse to the first.
  std::vector<double> separated;
  separated.reserve(out.size());
  for (double x : out) {
    if (separated.empty() || x - separated.back() > min_gap) separated.push_back(x);
  }
  return separated;
}

}  // namespace sharpbound::oracle
