// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sharpbound/bounds.hpp"
#include "sharpbound/certificate.hpp"
#include "sharpbound/distribution.hpp"
#include "sharpbound/extremal.hpp"
#include "sharpbound/interval.hpp"
#include "sharpbound/oracle/dual.hpp"
#include "sharpbound/oracle/grid.hpp"
#include "sharpbound/oracle/primal.hpp"

namespace sharpbound::oracle {

inline constexpr double kGridViolationTolerance = 1e-10;
inline constexpr double kEndpointTolerance = 1e-12;
inline constexpr double kDefaultOracleTolerance = 5e-3;

struct CertificateCheck {
  bool majorizes = false;
  bool nonnegative = false;
  double worst_violation = 0.0;  // max of g - f over checked points, floored at 0
  double worst_at = 0.0;
  std::size_t violations = 0;
  double objective = 0.0;
};

/// Checks f >= g at every grid point (with -a and b inserted), f(-a) >= 1
/// and f(b) >= 1, and global nonnegativity of f. Violations are reported.
inline CertificateCheck verify_certificate(const QuadraticCertificate& cert,
                                           const IntervalSpec& interval, const GridSpec& grid) {
  CertificateCheck check;
  check.objective = cert.objective();
  check.nonnegative = cert.nonnegative();

  const std::vector<double> forced = {-interval.a(), interval.b()};
  auto record = [&](double x, double deficit, double tolerance) {
    if (deficit > check.worst_violation) {
      check.worst_violation = deficit;
      check.worst_at = x;
    }
    if (deficit > tolerance) ++check.violations;
  };
  for (double x : grid_points(grid, forced)) {
    record(x, (interval.excludes(x) ? 1.0 : 0.0) - cert(x), kGridViolationTolerance);
  }
  if (!interval.one_sided()) {
    record(-interval.a(), 1.0 - cert(-interval.a()), kEndpointTolerance);
  }
  record(interval.b(), 1.0 - cert(interval.b()), kEndpointTolerance);

  check.majorizes = check.violations == 0 && check.nonnegative;
  return check;
}

struct MonteCarloReport {
  double empirical = 0.0;
  double closed_form = 0.0;
  double z_score = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Samples the extremal distribution with std::mt19937_64 seeded by `seed`;
/// uniforms are the top 53 bits of each draw, mapped through the CDF.
inline MonteCarloReport monte_carlo_attainment(const IntervalSpec& interval, std::uint64_t samples,
                                               std::uint64_t seed) {
  if (samples < 10000) {
    throw DomainError("monte_carlo_attainment: require at least 10^4 samples");
  }
  const DiscreteDistribution dist = extremal_distribution(interval);
  std::vector<double> cumulative;
  std::vector<bool> excluded;
  double acc = 0.0;
  for (const Atom& atom : dist.atoms()) {
    acc += atom.mass;
    cumulative.push_back(acc);
    excluded.push_back(interval.excludes(atom.location));
  }
  cumulative.back() = 1.0;

  std::mt19937_64 rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    std::size_t idx = 0;
    while (idx + 1 < cumulative.size() && u >= cumulative[idx]) ++idx;
    if (excluded[idx]) ++hits;
  }

  MonteCarloReport report;
  report.samples = samples;
  report.seed = seed;
  report.empirical = static_cast<double>(hits) / static_cast<double>(samples);
  report.closed_form = bound(interval).value;
  const double p = report.closed_form;
  if (p < 1.0) {
    report.z_score = (report.empirical - p) / std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  }
  return report;
}

struct OracleReport {
  double closed_form = 0.0;
  BoundCase bound_case = BoundCase::DegenerateOne;
  double primal_value = 0.0;
  double dual_value = 0.0;
  double primal_gap = 0.0;  // closed_form - primal_value
  double dual_gap = 0.0;    // dual_value - closed_form
  double tolerance = kDefaultOracleTolerance;
  GridSpec grid;
  DiscreteDistribution primal_support;
  QuadraticCertificate dual_majorant;
  QuadraticCertificate certificate;
  CertificateCheck certificate_check;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

struct VerificationOptions {
  double tolerance = kDefaultOracleTolerance;
  PrimalOptions primal;
  /// Check this quadratic instead of the closed-form certificate.
  std::optional<QuadraticCertificate> certificate;
};

/// Runs the primal search, the dual LP and the certificate check on one
/// grid. Failed checks are listed in `failures`; nothing throws for a
/// verification failure.
inline OracleReport full_verification(const IntervalSpec& interval, const GridSpec& grid,
                                      const VerificationOptions& options = {}) {
  const double tolerance = options.tolerance;
  if (interval.one_sided()) {
    throw DomainError("full_verification: requires a finite left endpoint");
  }
  OracleReport report;
  const BoundResult closed = bound(interval);
  report.closed_form = closed.value;
  report.bound_case = closed.bound_case;
  report.tolerance = tolerance;
  report.grid = grid;

  const PrimalReport primal = primal_three_atom_bound(interval, grid, options.primal);
  report.primal_value = primal.value;
  report.primal_support = primal.support;
  report.primal_gap = report.closed_form - report.primal_value;

  const DualReport dual = dual_lp_bound(interval, grid);
  report.dual_value = dual.value;
  report.dual_majorant = dual.majorant;
  report.dual_gap = report.dual_value - report.closed_form;

  report.certificate = options.certificate.value_or(certificate(interval));
  report.certificate_check = verify_certificate(report.certificate, interval, grid);

  if (report.primal_gap < -1e-9) {
    report.failures.push_back("primal value exceeds the closed-form bound");
  }
  if (report.primal_gap > tolerance) {
    report.failures.push_back("primal value is further than tolerance below the closed form");
  }
  if (std::abs(report.dual_gap) > tolerance) {
    report.failures.push_back("dual value is further than tolerance from the closed form");
  }
  if (report.dual_gap > 1e-9) {
    report.failures.push_back("dual value exceeds the closed-form bound");
  }
  if (!report.certificate_check.majorizes) {
    report.failures.push_back("closed-form certificate does not majorize the indicator");
  }
  if (std::abs(report.certificate_check.objective - report.closed_form) > 1e-12) {
    report.failures.push_back("certificate objective differs from the closed form");
  }
  return report;
}

}  // namespace sharpbound::oracle
