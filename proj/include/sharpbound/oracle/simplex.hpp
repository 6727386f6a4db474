// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace sharpbound::oracle {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> x;     // primal variables
  std::vector<double> dual;  // one multiplier per equality row
};

/// Dense two-phase tableau simplex for
///
///   maximize cost . x  subject to  A x = rhs,  x >= 0,
///
/// intended for a handful of rows and many columns. Uses Dantzig pricing
/// and falls back to Bland's rule after a run of degenerate pivots.
/// `rows` is row-major, one vector per equality.
class DenseSimplex {
 public:
  static constexpr double kPivotTolerance = 1e-12;
  static constexpr double kOptimalityTolerance = 1e-12;

  DenseSimplex(std::vector<std::vector<double>> rows, std::vector<double> rhs,
               std::vector<double> cost)
      : m_(rows.size()), n_(cost.size()), cost_(std::move(cost)) {
    // Columns: n_ structural then m_ artificial, then the right-hand side.
    width_ = n_ + m_ + 1;
    tableau_.assign(m_, std::vector<double>(width_, 0.0));
    sign_.assign(m_, 1.0);
    for (std::size_t r = 0; r < m_; ++r) {
      sign_[r] = rhs[r] < 0.0 ? -1.0 : 1.0;
      for (std::size_t c = 0; c < n_; ++c) tableau_[r][c] = sign_[r] * rows[r][c];
      tableau_[r][n_ + r] = 1.0;
      tableau_[r][width_ - 1] = sign_[r] * rhs[r];
    }
    basis_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) basis_[r] = n_ + r;
  }

  LpSolution solve(std::size_t max_iterations = 100000) {
    LpSolution out;
    // Phase 1: maximize -sum(artificials).
    std::vector<double> phase1(n_ + m_, 0.0);
    for (std::size_t r = 0; r < m_; ++r) phase1[n_ + r] = -1.0;
    const LpStatus s1 = run(phase1, n_ + m_, max_iterations);
    if (s1 == LpStatus::IterationLimit) {
      out.status = s1;
      return out;
    }
    if (objective_of(phase1) < -1e-9) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    drive_out_artificials();

    std::vector<double> phase2(n_ + m_, 0.0);
    for (std::size_t c = 0; c < n_; ++c) phase2[c] = cost_[c];
    out.status = run(phase2, n_, max_iterations);
    if (out.status != LpStatus::Optimal) return out;

    out.x.assign(n_, 0.0);
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) out.x[basis_[r]] = tableau_[r][width_ - 1];
    }
    out.objective = objective_of(phase2);
    // y = c_B B^{-1}; the artificial columns hold B^{-1} up to row signs.
    out.dual.assign(m_, 0.0);
    for (std::size_t col = 0; col < m_; ++col) {
      double acc = 0.0;
      for (std::size_t r = 0; r < m_; ++r) acc += phase2[basis_[r]] * tableau_[r][n_ + col];
      out.dual[col] = acc * sign_[col];
    }
    return out;
  }

 private:
  double objective_of(const std::vector<double>& cost) const {
    double acc = 0.0;
    for (std::size_t r = 0; r < m_; ++r) acc += cost[basis_[r]] * tableau_[r][width_ - 1];
    return acc;
  }

  // Columns >= `allowed` never enter.
  LpStatus run(const std::vector<double>& cost, std::size_t allowed, std::size_t max_iterations) {
    std::size_t degenerate_run = 0;
    std::vector<double> basic_cost(m_);
    for (std::size_t iter = 0; iter < max_iterations; ++iter) {
      for (std::size_t r = 0; r < m_; ++r) basic_cost[r] = cost[basis_[r]];
      const bool bland = degenerate_run > 50;

      std::size_t entering = allowed;
      double best = kOptimalityTolerance;
      for (std::size_t c = 0; c < allowed; ++c) {
        double reduced = cost[c];
        for (std::size_t r = 0; r < m_; ++r) reduced -= basic_cost[r] * tableau_[r][c];
        if (reduced > best) {
          entering = c;
          if (bland) break;
          best = reduced;
        }
      }
      if (entering == allowed) return LpStatus::Optimal;

      std::size_t leaving = m_;
      double ratio = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < m_; ++r) {
        const double coef = tableau_[r][entering];
        if (coef <= kPivotTolerance) continue;
        const double t = tableau_[r][width_ - 1] / coef;
        if (t < ratio || (t == ratio && leaving < m_ && basis_[r] < basis_[leaving])) {
          ratio = t;
          leaving = r;
        }
      }
      if (leaving == m_) return LpStatus::Unbounded;
      degenerate_run = ratio <= 0.0 ? degenerate_run + 1 : 0;
      pivot(leaving, entering);
    }
    return LpStatus::IterationLimit;
  }

  void pivot(std::size_t row, std::size_t col) {
    std::vector<double>& pr = tableau_[row];
    const double inv = 1.0 / pr[col];
    for (double& v : pr) v *= inv;
    pr[col] = 1.0;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == row) continue;
      const double factor = tableau_[r][col];
      if (factor == 0.0) continue;
      for (std::size_t c = 0; c < width_; ++c) tableau_[r][c] -= factor * pr[c];
      tableau_[r][col] = 0.0;
    }
    basis_[row] = col;
  }

  // Replace zero-level artificials in the basis by structural columns. A
  // row with no usable entry is redundant and keeps its artificial at zero.
  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      std::size_t best = n_;
      double magnitude = kPivotTolerance;
      for (std::size_t c = 0; c < n_; ++c) {
        if (std::abs(tableau_[r][c]) > magnitude) {
          magnitude = std::abs(tableau_[r][c]);
          best = c;
        }
      }
      if (best < n_) pivot(r, best);
    }
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_ = 0;
  std::vector<double> cost_;
  std::vector<std::vector<double>> tableau_;
  std::vector<double> sign_;
  std::vector<std::size_t> basis_;
};

}  // namespace sharpbound::oracle
