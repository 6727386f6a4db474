// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "sharpbound/distribution.hpp"
#include "sharpbound/errors.hpp"
#include "sharpbound/extremal.hpp"
#include "sharpbound/interval.hpp"
#include "sharpbound/oracle/grid.hpp"
#include "sharpbound/oracle/moment_system.hpp"

namespace sharpbound::oracle {

/// Masses down to this are accepted and clamped to zero.
inline constexpr double kMassTolerance = 1e-12;

struct PrimalOptions {
  /// Also place the closed-form extremal atoms on the candidate grid.
  bool force_extremal_atoms = false;
};

struct PrimalReport {
  double value = 0.0;
  DiscreteDistribution support;
  GridSpec grid;
  std::size_t grid_size = 0;
  std::size_t candidates_evaluated = 0;
};

namespace detail {

struct Candidate {
  double value = -1.0;
  std::array<double, 3> x{};
  std::array<double, 3> p{};
  int atoms = 0;

  bool lexicographically_before(const Candidate& other) const noexcept {
    for (int i = 0; i < std::min(atoms, other.atoms); ++i) {
      if (x[i] != other.x[i]) return x[i] < other.x[i];
    }
    return atoms < other.atoms;
  }

  bool better_than(const Candidate& other) const noexcept {
    if (value != other.value) return value > other.value;
    return lexicographically_before(other);
  }
};

inline bool all_feasible(const std::array<double, 3>& p) noexcept {
  return p[0] >= -kMassTolerance && p[1] >= -kMassTolerance && p[2] >= -kMassTolerance;
}

inline double clamp_mass(double p) noexcept { return p < 0.0 ? 0.0 : p; }

}  // namespace detail

/// Largest exclusion probability over zero-mean unit-variance distributions
/// supported on at most three grid points.
///
/// For a support x1 < x2 < x3 the masses are nonnegative iff
/// x1 x3 <= -1 and -1/x3 <= x2 <= -1/x1. With x1, x3 fixed, p1 increases
/// and p3 decreases in x2, and p2 is convex in x2, so inside a run of
/// middle points sharing an indicator value the maximum over x2 sits at a
/// run endpoint or next to the midpoint (x1 + x3)/2. Only those x2 are
/// evaluated; the result equals exhaustive enumeration of all triples.
inline PrimalReport primal_three_atom_bound(const IntervalSpec& interval, const GridSpec& grid,
                                            PrimalOptions options = {}) {
  if (interval.one_sided()) {
    throw DomainError("primal_three_atom_bound: requires a finite left endpoint");
  }
  std::vector<double> forced = {-interval.a(), interval.b()};
  if (options.force_extremal_atoms) {
    const DiscreteDistribution extremal = extremal_distribution(interval);
    for (const Atom& atom : extremal.atoms()) {
      forced.push_back(atom.location);
    }
  }
  const std::vector<double> xs = grid_points(grid, forced);
  const std::size_t n = xs.size();
  auto excluded = [&](std::size_t i) { return interval.excludes(xs[i]) ? 1.0 : 0.0; };

  // Indicator is 1 on [0, left_end), 0 on [left_end, right_begin), 1 after.
  const std::size_t left_end = static_cast<std::size_t>(
      std::upper_bound(xs.begin(), xs.end(), -interval.a()) - xs.begin());
  const std::size_t right_begin = static_cast<std::size_t>(
      std::lower_bound(xs.begin(), xs.end(), interval.b()) - xs.begin());
  const std::size_t first_positive = static_cast<std::size_t>(
      std::upper_bound(xs.begin(), xs.end(), 0.0) - xs.begin());

  auto index_at_least = [&](double v) {
    return static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), v) - xs.begin());
  };
  auto index_above = [&](double v) {
    return static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), v) - xs.begin());
  };

  detail::Candidate best;
  std::size_t evaluated = 0;

  auto consider_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    ++evaluated;
    const std::array<double, 3> p = lagrange_moment_masses(xs[i], xs[j], xs[k]);
    if (!detail::all_feasible(p)) return;
    detail::Candidate c;
    c.atoms = 3;
    c.x = {xs[i], xs[j], xs[k]};
    c.p = {detail::clamp_mass(p[0]), detail::clamp_mass(p[1]), detail::clamp_mass(p[2])};
    c.value = c.p[0] * excluded(i) + c.p[1] * excluded(j) + c.p[2] * excluded(k);
    if (c.better_than(best)) best = c;
  };

  for (std::size_t i = 0; i < first_positive && xs[i] < 0.0; ++i) {
    const double x1 = xs[i];
    // x1 x3 <= -1, widened by one index for rounding.
    std::size_t k_start = index_at_least(-1.0 / x1);
    if (k_start > first_positive) --k_start;
    k_start = std::max(k_start, first_positive);
    for (std::size_t k = k_start; k < n; ++k) {
      const double x3 = xs[k];
      const double product = x1 * x3;

      if (std::abs(1.0 + product) <= 1e-12 * std::max(1.0, std::abs(product))) {
        ++evaluated;
        const double width = x3 - x1;
        detail::Candidate c;
        c.atoms = 2;
        c.x = {x1, x3, 0.0};
        c.p = {x3 / width, -x1 / width, 0.0};
        c.value = c.p[0] * excluded(i) + c.p[1] * excluded(k);
        if (c.better_than(best)) best = c;
      }
      if (1.0 + product > 1e-12 * std::max(1.0, std::abs(product))) continue;

      // Feasible middle range [-1/x3, -1/x1], widened by one on each side.
      std::size_t j_lo = index_at_least(-1.0 / x3);
      std::size_t j_hi_end = index_above(-1.0 / x1);  // one past
      if (j_lo > 0) --j_lo;
      if (j_hi_end < n) ++j_hi_end;
      j_lo = std::max(j_lo, i + 1);
      j_hi_end = std::min(j_hi_end, k);
      if (j_lo >= j_hi_end) continue;

      const double g1 = excluded(i);
      const double g3 = excluded(k);
      const std::array<std::size_t, 4> cuts = {j_lo, std::clamp(left_end, j_lo, j_hi_end),
                                               std::clamp(right_begin, j_lo, j_hi_end), j_hi_end};
      for (int run = 0; run < 3; ++run) {
        const std::size_t s = cuts[run];
        const std::size_t e = cuts[run + 1];  // one past
        if (s >= e) continue;
        const double g2 = run == 1 ? 0.0 : 1.0;
        const double rise = g1 - g2;  // weight on increasing p1
        const double fall = g3 - g2;  // weight on decreasing p3
        // Value is monotone or convex in x2 unless both ends are excluded
        // and the middle is not; then 1 - p2 is concave, peaking at the
        // midpoint. Run endpoints may be the widened, infeasible ones, so
        // their inward neighbours are probed too.
        consider_triple(i, s, k);
        if (s + 1 < e) consider_triple(i, s + 1, k);
        if (e - 1 > s + 1) consider_triple(i, e - 1, k);
        if (e >= 2 && e - 2 > s + 1) consider_triple(i, e - 2, k);
        if (rise > 0.0 && fall > 0.0) {
          const std::size_t mid = std::clamp(index_at_least(0.5 * (x1 + x3)), s, e - 1);
          if (mid > s) consider_triple(i, mid - 1, k);
          consider_triple(i, mid, k);
        }
      }
    }
  }

  if (best.atoms == 0) {
    throw OracleError("no feasible atomic distribution on grid");
  }

  PrimalReport report;
  report.grid = grid;
  report.grid_size = n;
  report.candidates_evaluated = evaluated;
  // Re-solve the winning support with the pivoted system as a cross-check.
  std::array<double, 3> masses = best.p;
  if (best.atoms == 3) {
    if (const auto solved = solve_moment_system(best.x)) {
      masses = {detail::clamp_mass((*solved)[0]), detail::clamp_mass((*solved)[1]),
                detail::clamp_mass((*solved)[2])};
    }
  }
  std::vector<Atom> atoms;
  for (int t = 0; t < best.atoms; ++t) atoms.push_back({best.x[t], masses[t]});
  report.support = DiscreteDistribution::from_atoms(std::move(atoms));
  report.value = report.support.exclusion_mass(interval);
  return report;
}

}  // namespace sharpbound::oracle
