// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "sharpbound/certificate.hpp"
#include "sharpbound/errors.hpp"
#include "sharpbound/interval.hpp"
#include "sharpbound/oracle/grid.hpp"
#include "sharpbound/oracle/simplex.hpp"

namespace sharpbound::oracle {

struct DualReport {
  double value = 0.0;                 // c0 + c2 of the optimal grid majorant
  QuadraticCertificate majorant;      // optimal (c0, c1, c2)
  double min_slack = 0.0;             // min over grid of f(x) - g(x)
  GridSpec grid;
  std::size_t grid_size = 0;
};

/// Grid-discretized dual of the moment problem:
///
///   minimize c0 + c2  s.t.  c0 + c1 x + c2 x^2 >= g(x) on the grid, c2 >= 0.
///
/// Solved by the simplex method on its LP dual (weights on grid points plus
/// a slack for c2 >= 0); the optimal (c0, c1, c2) are the row multipliers.
/// Only grid constraints are enforced, so the value can fall short of the
/// exact infimum by O(step^2). The points -a, b and 0 are always on the grid.
inline DualReport dual_lp_bound(const IntervalSpec& interval, const GridSpec& grid,
                                std::span<const double> extra_points = {}) {
  if (interval.one_sided()) {
    throw DomainError("dual_lp_bound: requires a finite left endpoint");
  }
  std::vector<double> forced = {-interval.a(), interval.b(), 0.0};
  forced.insert(forced.end(), extra_points.begin(), extra_points.end());
  const std::vector<double> xs = grid_points(grid, forced);
  const std::size_t n = xs.size();

  // Columns: one weight per grid point, then the slack of c2 >= 0.
  std::vector<std::vector<double>> rows(3, std::vector<double>(n + 1, 0.0));
  std::vector<double> cost(n + 1, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    rows[0][j] = 1.0;
    rows[1][j] = xs[j];
    rows[2][j] = xs[j] * xs[j];
    cost[j] = interval.excludes(xs[j]) ? 1.0 : 0.0;
  }
  rows[2][n] = 1.0;

  DenseSimplex lp(std::move(rows), {1.0, 0.0, 1.0}, std::move(cost));
  const LpSolution sol = lp.solve();
  switch (sol.status) {
    case LpStatus::Optimal:
      break;
    case LpStatus::Infeasible:
      throw OracleError("dual LP infeasible");
    case LpStatus::Unbounded:
      throw OracleError("dual LP unbounded");
    case LpStatus::IterationLimit:
      throw OracleError("dual LP iteration limit reached");
  }

  DualReport report;
  report.majorant = {sol.dual[0], sol.dual[1], sol.dual[2]};
  report.value = report.majorant.objective();
  report.grid = grid;
  report.grid_size = n;
  double slack = std::numeric_limits<double>::infinity();
  for (double x : xs) {
    slack = std::min(slack, report.majorant(x) - (interval.excludes(x) ? 1.0 : 0.0));
  }
  report.min_slack = slack;
  return report;
}

}  // namespace sharpbound::oracle
