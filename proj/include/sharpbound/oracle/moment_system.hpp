// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <utility>

namespace sharpbound::oracle {

/// Rejection threshold for the infinity-norm condition number.
inline constexpr double kMaxConditionNumber = 1e12;

/// Masses p with sum p = 1, sum p x = 0, sum p x^2 = 1 on three distinct
/// points, by Gaussian elimination with partial pivoting. Returns nullopt
/// for a numerically singular or ill-conditioned system.
inline std::optional<std::array<double, 3>> solve_moment_system(const std::array<double, 3>& x) {
  std::array<std::array<double, 4>, 3> m{};
  for (int j = 0; j < 3; ++j) {
    m[0][j] = 1.0;
    m[1][j] = x[j];
    m[2][j] = x[j] * x[j];
  }
  m[0][3] = 1.0;
  m[1][3] = 0.0;
  m[2][3] = 1.0;

  double norm = 0.0;
  for (const auto& row : m) {
    norm = std::max(norm, std::abs(row[0]) + std::abs(row[1]) + std::abs(row[2]));
  }

  // Inverse via adjugate, for the condition estimate.
  const double a00 = m[0][0], a01 = m[0][1], a02 = m[0][2];
  const double a10 = m[1][0], a11 = m[1][1], a12 = m[1][2];
  const double a20 = m[2][0], a21 = m[2][1], a22 = m[2][2];
  const std::array<double, 9> adj = {
      a11 * a22 - a12 * a21, a02 * a21 - a01 * a22, a01 * a12 - a02 * a11,
      a12 * a20 - a10 * a22, a00 * a22 - a02 * a20, a02 * a10 - a00 * a12,
      a10 * a21 - a11 * a20, a01 * a20 - a00 * a21, a00 * a11 - a01 * a10,
  };
  const double det = a00 * adj[0] + a01 * adj[3] + a02 * adj[6];
  if (det == 0.0 || !std::isfinite(det)) return std::nullopt;
  double inv_norm = 0.0;
  for (int r = 0; r < 3; ++r) {
    inv_norm = std::max(inv_norm, (std::abs(adj[3 * r]) + std::abs(adj[3 * r + 1]) +
                                   std::abs(adj[3 * r + 2])) / std::abs(det));
  }
  if (!(norm * inv_norm <= kMaxConditionNumber)) return std::nullopt;

  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0.0) return std::nullopt;
    std::swap(m[col], m[pivot]);
    for (int r = col + 1; r < 3; ++r) {
      const double factor = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  std::array<double, 3> p{};
  for (int r = 2; r >= 0; --r) {
    double acc = m[r][3];
    for (int c = r + 1; c < 3; ++c) acc -= m[r][c] * p[c];
    p[r] = acc / m[r][r];
  }
  return p;
}

/// Same masses from the Lagrange basis: p_i = (1 + x_j x_k) / ((x_i - x_j)(x_i - x_k)).
/// Cheap enough for enumeration; points must be distinct.
inline std::array<double, 3> lagrange_moment_masses(double x1, double x2, double x3) noexcept {
  return {
      (1.0 + x2 * x3) / ((x1 - x2) * (x1 - x3)),
      (1.0 + x1 * x3) / ((x2 - x1) * (x2 - x3)),
      (1.0 + x1 * x2) / ((x3 - x1) * (x3 - x2)),
  };
}

}  // namespace sharpbound::oracle
