// SPDX-License-Identifier: Apache-2.0
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sharpbound.hpp"
#include "sharpbound/cli/app.hpp"

using namespace sharpbound;

namespace {

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    out.push_back(std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))));
  }
  return out;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}

// 1. Quoted values and ratios.
Outcome quoted_values() {
  Outcome o;
  const double p11 = bound(canonicalize(1, 1)).value;
  const double p21 = bound(canonicalize(2, 1)).value;
  o.require(std::abs(p11 - 1.0) <= 1e-15, fmt("P(1,1) = %.17g", p11));
  o.require(std::abs(p21 - 5.0 / 9.0) <= 1e-15, fmt("P(2,1) = %.17g", p21));
  for (double k : {3.0, 4.0, 5.0, 6.0}) {
    const double pk = bound(canonicalize(k, 1)).value;
    o.require(std::abs(pk - 0.5) <= 1e-15, fmt("P(%g,1) = %.17g", k, pk));
    o.require(std::abs(p11 / pk - 1.0 - 1.0) <= 1e-12, fmt("ratio at k=%g off", k));
  }
  o.require(std::abs(p11 / p21 - 1.0 - 0.8) <= 1e-12, fmt("P11/P21 - 1 = %.17g", p11 / p21 - 1));
  return o;
}

// 2. Chebyshev and Cantelli as special cases.
Outcome special_cases() {
  Outcome o;
  for (double b : log_spaced(0.1, 10, 50)) {
    const double sym = bound(canonicalize(b, b)).value;
    const double one_sided = bound(canonicalize(kInfinity, b)).value;
    o.require(std::abs(sym - std::min(1.0, 1.0 / (b * b))) <= 1e-12, fmt("P(b,b) at b=%g", b));
    o.require(std::abs(one_sided - 1.0 / (1.0 + b * b)) <= 1e-12, fmt("P(inf,b) at b=%g", b));
  }
  return o;
}

// 3. Continuity at the case boundaries.
Outcome boundary_continuity() {
  Outcome o;
  for (double b : log_spaced(0.1, 10, 100)) {
    const double a1 = 1.0 / b;
    const double mid_at_a1 = sharpbound::detail::interpolated_formula(a1, b);
    o.require(std::abs(mid_at_a1 - 1.0) <= 1e-12, fmt("a=1/b, b=%g: %.17g", b, mid_at_a1));
    const double a2 = b + 2.0 / b;
    const double mid_at_a2 = sharpbound::detail::interpolated_formula(a2, b);
    const double cant = sharpbound::detail::cantelli_formula(b);
    o.require(std::abs(mid_at_a2 - cant) <= 1e-12, fmt("a=b+2/b, b=%g: %.17g vs %.17g", b, mid_at_a2, cant));
    // The evaluated bound is continuous too, from both sides of each boundary.
    for (double a : {a2, std::nextafter(a2, 0.0), std::nextafter(a2, 1e9)}) {
      o.require(std::abs(bound(canonicalize(a, b)).value - cant) <= 1e-12, fmt("bound near a=b+2/b, b=%g", b));
    }
  }
  return o;
}

// 4. Extremal distributions satisfy the constraints and attain the bound.
Outcome extremal_attainment() {
  Outcome o;
  for (double p : log_spaced(0.2, 8, 20)) {
    for (double q : log_spaced(0.2, 8, 20)) {
      const IntervalSpec iv = canonicalize(p, q);
      const DiscreteDistribution d = extremal_distribution(iv);
      const double value = bound(iv).value;
      o.require(std::abs(d.total_mass() - 1.0) <= 1e-12, fmt("mass at (%g,%g)", p, q));
      o.require(std::abs(d.mean()) <= 1e-12, fmt("mean at (%g,%g)", p, q));
      o.require(std::abs(d.variance() - 1.0) <= 1e-12, fmt("variance at (%g,%g)", p, q));
      o.require(std::abs(d.exclusion_mass(iv) - value) <= 1e-12, fmt("exclusion at (%g,%g)", p, q));
    }
  }
  return o;
}

// 5. Certificates: objective equals the bound and they majorize the indicator.
Outcome certificate_duality() {
  Outcome o;
  for (double p : log_spaced(0.2, 8, 20)) {
    for (double q : log_spaced(0.2, 8, 20)) {
      const IntervalSpec iv = canonicalize(p, q);
      const QuadraticCertificate c = certificate(iv);
      o.require(std::abs(c.objective() - bound(iv).value) <= 1e-12, fmt("objective at (%g,%g)", p, q));
      const oracle::GridSpec grid = oracle::default_grid(iv);
      o.require(grid.steps == 2001, "grid is not 2001 points");
      const oracle::CertificateCheck check = oracle::verify_certificate(c, iv, grid);
      o.require(check.majorizes && check.violations == 0,
                fmt("violation %.3g at (%g,%g)", check.worst_violation, p, q));
    }
  }
  return o;
}

// 6. Primal and dual oracles agree with the closed form.
Outcome oracle_equivalence() {
  Outcome o;
  double worst_primal = 0, worst_dual = 0, worst_forced = 0;
  for (double p : log_spaced(0.2, 8, 10)) {
    for (double q : log_spaced(0.2, 8, 10)) {
      const IntervalSpec iv = canonicalize(p, q);
      const oracle::GridSpec grid = oracle::default_grid(iv);
      const double closed = bound(iv).value;
      const double primal = oracle::primal_three_atom_bound(iv, grid).value;
      const double dual = oracle::dual_lp_bound(iv, grid).value;
      worst_primal = std::max(worst_primal, std::abs(primal - closed));
      worst_dual = std::max(worst_dual, std::abs(dual - closed));
      o.require(std::abs(primal - closed) <= 5e-3, fmt("primal off at (%g,%g): %.3g", p, q, primal - closed));
      o.require(std::abs(dual - closed) <= 5e-3, fmt("dual off at (%g,%g): %.3g", p, q, dual - closed));
      o.require(primal <= closed + 1e-9, fmt("primal exceeds bound at (%g,%g)", p, q));

      oracle::PrimalOptions forced;
      forced.force_extremal_atoms = true;
      const double attained = oracle::primal_three_atom_bound(iv, grid, forced).value;
      worst_forced = std::max(worst_forced, std::abs(attained - closed));
      o.require(std::abs(attained - closed) <= 1e-9, fmt("forced primal off at (%g,%g): %.3g", p, q, attained - closed));
    }
  }
  if (o.pass) {
    o.detail = fmt("max |primal-closed| %.3g, max |dual-closed| %.3g, forced %.3g", worst_primal,
                   worst_dual, worst_forced);
  }
  return o;
}

// 7. Sampling the extremal distribution reproduces the bound.
Outcome monte_carlo() {
  Outcome o;
  const std::vector<std::pair<double, double>> cases = {{1, 1}, {2, 1}, {kInfinity, 1}, {0.5, 0.5}};
  std::string zs;
  for (const auto& [a, b] : cases) {
    const oracle::MonteCarloReport r = oracle::monte_carlo_attainment(canonicalize(a, b), 1000000, 42);
    o.require(std::abs(r.z_score) <= 4.0, fmt("z = %.3g at (%g,%g)", r.z_score, a, b));
    zs += fmt("%.3g ", r.z_score);
  }
  if (o.pass) o.detail = "z-scores " + zs;
  return o;
}

// 8. Default curve reproduces the figure family.
Outcome figure_reproduction() {
  Outcome o;
  std::ostringstream out, err;
  const int code = cli::run({"curve"}, out, err);
  o.require(code == 0, "curve exited with " + std::to_string(code) + ": " + err.str());
  std::istringstream csv(out.str());
  std::string line;
  std::getline(csv, line);
  o.require(line == "b,k,bound,case", "bad header: " + line);
  const std::vector<double> expected = {1, 5.0 / 9, 0.5, 0.5, 0.5, 0.5, 0.5};
  std::vector<double> at_one;
  std::string previous_b;
  double previous = 2.0;
  while (std::getline(csv, line)) {
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    if (fields.size() != 4) {
      o.require(false, "bad row: " + line);
      break;
    }
    const double value = std::stod(fields[2]);
    if (fields[0] != previous_b) previous = 2.0;
    o.require(value <= previous, "row not nonincreasing in k: " + line);
    previous = value;
    previous_b = fields[0];
    if (std::stod(fields[0]) == 1.0) at_one.push_back(value);
  }
  o.require(at_one.size() == expected.size(), "b = 1 rows missing");
  for (std::size_t i = 0; i < std::min(at_one.size(), expected.size()); ++i) {
    o.require(std::abs(at_one[i] - expected[i]) <= 1e-15, fmt("b=1 row %g: %.17g", static_cast<double>(i), at_one[i]));
  }
  return o;
}

// 9. Quadratic events reduce to the interval bound.
Outcome quadratic_reduction() {
  Outcome o;
  const QuadraticEventResult r1 = quadratic_event_bound(1, -2);
  o.require(std::abs(r1.value - 5.0 / 9) <= 1e-15 && r1.sharpness == Sharpness::Sharp, "(1,-2)");
  const QuadraticEventResult r2 = quadratic_event_bound(0, 1);
  o.require(r2.value == 1.0, "(0,1)");
  const QuadraticEventResult r3 = quadratic_event_bound(5, 4);
  o.require(r3.value == 1.0 && r3.sharpness == Sharpness::ValidNotSharp, "(5,4)");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {"AC1 quoted values P11=1, P21=5/9, Pk1=1/2, ratios 80%/100%", 0.1, quoted_values},
      {"AC2 modified Chebyshev and Cantelli special cases", 0.1, special_cases},
      {"AC3 case-boundary continuity", 0.1, boundary_continuity},
      {"AC4 extremal attainment on 20x20 grid", 1.0, extremal_attainment},
      {"AC5 certificate duality on 20x20 grid", 5.0, certificate_duality},
      {"AC6 primal/dual oracle equivalence on 10x10 grid", 60.0, oracle_equivalence},
      {"AC7 Monte Carlo attainment, 1e6 samples", 5.0, monte_carlo},
      {"AC8 figure reproduction via curve defaults", 1.0, figure_reproduction},
      {"AC9 quadratic-event reduction", 0.1, quadratic_reduction},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      o.detail += fmt(" (runtime %.2fs over budget %.2fs)", seconds, c.budget_seconds);
      o.pass = false;
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %s  (%.3fs)%s%s\n", o.pass ? "PASS" : "FAIL", c.name, seconds,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
