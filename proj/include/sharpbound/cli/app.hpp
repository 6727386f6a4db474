// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sharpbound.hpp"
#include "sharpbound/cli/format.hpp"

namespace sharpbound::cli {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitVerificationFailure = 1,
  kExitUsage = 2,
  kExitDomain = 3,
  kExitOracle = 4,
  kExitIo = 5,
};

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Output of one command: a JSON envelope and its text rendering.
struct CommandOutput {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> warnings;
  std::string text;
  int exit_code = kExitSuccess;
  /// When set, replaces the envelope on stdout (curve without --out).
  std::optional<std::string> raw_stdout;

  nlohmann::json envelope() const {
    return {{"command", command}, {"inputs", inputs}, {"result", result}, {"warnings", warnings}};
  }
};

namespace detail {

inline double require_real(const std::string& flag, const std::string& text, bool allow_infinity) {
  const auto v = parse_real(text, allow_infinity);
  if (!v) throw UsageError("invalid numeric value for " + flag + ": '" + text + "'");
  return *v;
}

/// The (a, b) pair or standardization inputs shared by several commands.
struct IntervalArgs {
  std::string a, b;
  std::string lower, upper, mean, var;

  void attach(CLI::App* cmd, bool allow_standardize) {
    cmd->add_option("--a", a, "Left magnitude of (-a, b); 'inf' allowed");
    cmd->add_option("--b", b, "Right endpoint of (-a, b)");
    if (allow_standardize) {
      cmd->add_option("--lower", lower, "Lower endpoint for a general variable ('-inf' allowed)");
      cmd->add_option("--upper", upper, "Upper endpoint for a general variable ('inf' allowed)");
      cmd->add_option("--mean", mean, "Mean of the general variable");
      cmd->add_option("--var", var, "Variance of the general variable");
    }
  }

  bool standardizing() const {
    return !lower.empty() || !upper.empty() || !mean.empty() || !var.empty();
  }

  IntervalSpec resolve(nlohmann::json& inputs) const {
    if (standardizing()) {
      if (!a.empty() || !b.empty()) {
        throw UsageError("give either --a/--b or --lower/--upper/--mean/--var, not both");
      }
      if (lower.empty() || upper.empty() || mean.empty() || var.empty()) {
        throw UsageError("--lower, --upper, --mean and --var must be given together");
      }
      const double lo = require_real("--lower", lower, true);
      const double hi = require_real("--upper", upper, true);
      const double mu = require_real("--mean", mean, false);
      const double v = require_real("--var", var, false);
      inputs["lower"] = json_real(lo);
      inputs["upper"] = json_real(hi);
      inputs["mean"] = json_real(mu);
      inputs["var"] = json_real(v);
      return standardize(lo, hi, mu, v);
    }
    if (a.empty() || b.empty()) throw UsageError("--a and --b are required");
    const double av = require_real("--a", a, true);
    const double bv = require_real("--b", b, false);
    inputs["a"] = json_real(av);
    inputs["b"] = json_real(bv);
    return canonicalize(av, bv);
  }
};

inline nlohmann::json interval_json(const IntervalSpec& iv) {
  return {{"a", json_real(iv.a())}, {"b", json_real(iv.b())}, {"reflected", iv.reflected()}};
}

inline void note_reflection(const IntervalSpec& iv, CommandOutput& out) {
  if (iv.reflected()) {
    out.warnings.push_back("interval reflected to canonical orientation a >= b");
  }
}

inline QuadraticCertificate parse_certificate(const std::string& text) {
  std::vector<double> coefs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coefs.push_back(require_real("--certificate", item, false));
  if (coefs.size() != 3) throw UsageError("--certificate expects c0,c1,c2");
  return {coefs[0], coefs[1], coefs[2]};
}

inline nlohmann::json certificate_json(const QuadraticCertificate& c) {
  return {{"c0", c.c0}, {"c1", c.c1}, {"c2", c.c2}, {"objective", c.objective()}};
}

inline nlohmann::json check_json(const oracle::CertificateCheck& check) {
  return {{"majorizes", check.majorizes},
          {"nonnegative", check.nonnegative},
          {"objective", check.objective},
          {"violations", check.violations},
          {"worst_at", check.worst_at},
          {"worst_violation", check.worst_violation}};
}

inline nlohmann::json grid_json(const oracle::GridSpec& g) {
  return {{"hi", g.hi}, {"lo", g.lo}, {"steps", g.steps}};
}

inline nlohmann::json distribution_json(const DiscreteDistribution& dist) {
  nlohmann::json atoms = nlohmann::json::array();
  for (const Atom& atom : dist.atoms()) {
    atoms.push_back({{"location", atom.location}, {"mass", atom.mass}});
  }
  return atoms;
}

inline std::string atom_table(const DiscreteDistribution& dist) {
  std::string s = "  location        mass\n";
  char line[96];
  for (const Atom& atom : dist.atoms()) {
    std::snprintf(line, sizeof(line), "  %-14s  %s\n", format_text(atom.location).c_str(),
                  format_text(atom.mass).c_str());
    s += line;
  }
  return s;
}

// --- commands -------------------------------------------------------------

inline CommandOutput cmd_bound(const IntervalArgs& args) {
  CommandOutput out;
  out.command = "bound";
  const IntervalSpec iv = args.resolve(out.inputs);
  const BoundResult r = bound(iv);
  out.result = interval_json(iv);
  out.result["case"] = to_string(r.bound_case);
  out.result["value"] = r.value;
  if (!iv.one_sided()) out.result["always_bound"] = always_bound(iv);
  note_reflection(iv, out);

  out.text = "bound: " + format_text(r.value) + "\ncase: " + std::string(to_string(r.bound_case)) +
             "\na: " + format_text(iv.a()) + "\nb: " + format_text(iv.b()) +
             "\nreflected: " + (iv.reflected() ? "true" : "false") + "\n";
  if (!iv.one_sided()) out.text += "always_bound: " + format_text(always_bound(iv)) + "\n";
  return out;
}

inline CommandOutput cmd_extremal(const IntervalArgs& args, double tol) {
  CommandOutput out;
  out.command = "extremal";
  const IntervalSpec iv = args.resolve(out.inputs);
  const BoundResult r = bound(iv);
  const DiscreteDistribution dist = extremal_distribution(iv);
  const double excluded = dist.exclusion_mass(iv);
  const bool ok = dist.satisfies_moment_constraints(tol) && std::abs(excluded - r.value) <= tol;

  out.result = interval_json(iv);
  out.result["case"] = to_string(r.bound_case);
  out.result["atoms"] = distribution_json(dist);
  out.result["total_mass"] = dist.total_mass();
  out.result["mean"] = dist.mean();
  out.result["second_moment"] = dist.second_moment();
  out.result["exclusion_probability"] = excluded;
  out.result["bound"] = r.value;
  out.result["checks_passed"] = ok;
  note_reflection(iv, out);
  if (!ok) out.exit_code = kExitVerificationFailure;

  out.text = "case: " + std::string(to_string(r.bound_case)) + "\n" + atom_table(dist) +
             "total mass: " + format_text(dist.total_mass()) + "\nmean: " + format_text(dist.mean()) +
             "\nsecond moment: " + format_text(dist.second_moment()) +
             "\nexclusion probability: " + format_text(excluded) + "\nbound: " + format_text(r.value) +
             "\n";
  return out;
}

inline CommandOutput cmd_certify(const IntervalArgs& args, double tol,
                                 const std::string& certificate_text) {
  CommandOutput out;
  out.command = "certify";
  const IntervalSpec iv = args.resolve(out.inputs);
  if (iv.one_sided()) throw DomainError("certify: requires a finite left endpoint");
  const BoundResult r = bound(iv);
  QuadraticCertificate cert = certificate(iv);
  if (!certificate_text.empty()) {
    cert = parse_certificate(certificate_text);
    out.inputs["certificate"] = {cert.c0, cert.c1, cert.c2};
  }
  const oracle::GridSpec grid = oracle::default_grid(iv);
  const oracle::CertificateCheck check = oracle::verify_certificate(cert, iv, grid);
  // A supplied certificate only has to majorize; the closed form must also be optimal.
  const bool optimal = std::abs(cert.objective() - r.value) <= tol;
  const bool ok = check.majorizes && (certificate_text.empty() ? optimal : true);

  out.result = interval_json(iv);
  out.result["case"] = to_string(r.bound_case);
  out.result["certificate"] = certificate_json(cert);
  out.result["bound"] = r.value;
  out.result["verification"] = check_json(check);
  out.result["grid"] = grid_json(grid);
  out.result["passed"] = ok;
  note_reflection(iv, out);
  if (!ok) out.exit_code = kExitVerificationFailure;

  out.text = "f(x) = c0 + c1 x + c2 x^2\n  c0: " + format_text(cert.c0) + "\n  c1: " +
             format_text(cert.c1) + "\n  c2: " + format_text(cert.c2) +
             "\nobjective: " + format_text(cert.objective()) + "\nbound: " + format_text(r.value) +
             "\nmajorizes: " + (check.majorizes ? "true" : "false") +
             "\nworst violation: " + format_text(check.worst_violation) + "\n";
  return out;
}

struct VerifyArgs {
  std::string grid_lo, grid_hi;
  std::size_t grid_steps = 0;
  std::uint64_t mc_samples = 1000000;
  std::uint64_t seed = 42;
  bool force_extremal = false;
  std::string certificate;
};

inline CommandOutput cmd_verify(const IntervalArgs& args, const VerifyArgs& v,
                                std::optional<double> tol) {
  CommandOutput out;
  out.command = "verify";
  const IntervalSpec iv = args.resolve(out.inputs);
  if (iv.one_sided()) throw DomainError("verify: requires a finite left endpoint");
  oracle::GridSpec grid = oracle::default_grid(iv);
  if (!v.grid_lo.empty()) grid.lo = require_real("--grid-lo", v.grid_lo, false);
  if (!v.grid_hi.empty()) grid.hi = require_real("--grid-hi", v.grid_hi, false);
  if (v.grid_steps != 0) grid.steps = v.grid_steps;
  grid.validate();

  oracle::VerificationOptions options;
  options.tolerance = tol.value_or(oracle::kDefaultOracleTolerance);
  options.primal.force_extremal_atoms = v.force_extremal;
  if (!v.certificate.empty()) {
    options.certificate = parse_certificate(v.certificate);
    out.inputs["certificate"] = {options.certificate->c0, options.certificate->c1,
                                 options.certificate->c2};
  }
  out.inputs["seed"] = v.seed;
  out.inputs["mc_samples"] = v.mc_samples;

  const oracle::OracleReport report = oracle::full_verification(iv, grid, options);
  const oracle::MonteCarloReport mc = oracle::monte_carlo_attainment(iv, v.mc_samples, v.seed);
  std::vector<std::string> failures = report.failures;
  if (std::abs(mc.z_score) > 4.0) failures.push_back("Monte Carlo z-score exceeds 4");

  out.result = interval_json(iv);
  out.result["case"] = to_string(report.bound_case);
  out.result["closed_form"] = report.closed_form;
  out.result["primal_value"] = report.primal_value;
  out.result["dual_value"] = report.dual_value;
  out.result["primal_gap"] = report.primal_gap;
  out.result["dual_gap"] = report.dual_gap;
  out.result["tolerance"] = report.tolerance;
  out.result["grid"] = grid_json(grid);
  out.result["primal_support"] = distribution_json(report.primal_support);
  out.result["dual_majorant"] = certificate_json(report.dual_majorant);
  out.result["certificate"] = certificate_json(report.certificate);
  out.result["certificate_check"] = check_json(report.certificate_check);
  out.result["monte_carlo"] = {{"closed_form", mc.closed_form},
                               {"empirical", mc.empirical},
                               {"samples", mc.samples},
                               {"seed", mc.seed},
                               {"z_score", mc.z_score}};
  out.result["failures"] = failures;
  out.result["passed"] = failures.empty();
  note_reflection(iv, out);
  if (!failures.empty()) out.exit_code = kExitVerificationFailure;

  out.text = "case: " + std::string(to_string(report.bound_case)) +
             "\nclosed form: " + format_text(report.closed_form) +
             "\nprimal: " + format_text(report.primal_value) + " (gap " +
             format_text(report.primal_gap) + ")\ndual: " + format_text(report.dual_value) +
             " (gap " + format_text(report.dual_gap) + ")\ncertificate majorizes: " +
             (report.certificate_check.majorizes ? "true" : "false") +
             "\nmonte carlo: " + format_text(mc.empirical) + " (z " + format_text(mc.z_score) +
             ")\n";
  for (const std::string& f : failures) out.text += "FAIL: " + f + "\n";
  out.text += failures.empty() ? "verification passed\n" : "verification failed\n";
  return out;
}

struct CurveArgs {
  std::string k_list = "1,2,3,4,5,6,inf";
  std::string b_min = "0.05";
  std::string b_max = "5";
  std::size_t b_steps = 200;
  std::string spacing = "linear";
  std::string anchors = "1";
  std::string out = "-";
};

inline std::vector<double> parse_list(const std::string& flag, const std::string& text,
                                      bool allow_infinity) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    values.push_back(require_real(flag, item, allow_infinity));
  }
  return values;
}

/// b values of the curve: the regular grid merged with the anchor values.
inline std::vector<double> curve_b_values(const CurveArgs& c) {
  const double lo = require_real("--b-min", c.b_min, false);
  const double hi = require_real("--b-max", c.b_max, false);
  if (!(lo > 0.0) || !(hi >= lo) || std::isinf(hi)) {
    throw UsageError("b range must satisfy 0 < b-min <= b-max < inf");
  }
  if (c.b_steps < 1 || (c.b_steps == 1 && lo != hi)) {
    throw UsageError("--b-steps must be at least 2 for a non-degenerate range");
  }
  std::vector<double> bs;
  const bool log_spacing = c.spacing == "log";
  if (!log_spacing && c.spacing != "linear") throw UsageError("--spacing must be linear or log");
  for (std::size_t i = 0; i < c.b_steps; ++i) {
    const double t = c.b_steps == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(c.b_steps - 1);
    bs.push_back(log_spacing ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)))
                             : lo + t * (hi - lo));
  }
  for (double anchor : parse_list("--anchors", c.anchors, false)) {
    if (anchor >= lo && anchor <= hi) bs.push_back(anchor);
  }
  std::sort(bs.begin(), bs.end());
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
  return bs;
}

inline std::vector<double> curve_k_values(const CurveArgs& c) {
  std::vector<double> ks = parse_list("--k-list", c.k_list, true);
  if (ks.empty()) throw UsageError("--k-list is empty");
  for (double k : ks) {
    if (std::isnan(k) || k < 1.0) throw UsageError("--k-list entries must be >= 1 (a >= b)");
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

/// CSV with header b,k,bound,case; one row per (b, k), k ascending within b.
inline std::string curve_csv(const std::vector<double>& bs, const std::vector<double>& ks) {
  std::string csv = "b,k,bound,case\n";
  for (double b : bs) {
    for (double k : ks) {
      const double a = std::isinf(k) ? kInfinity : k * b;
      const BoundResult r = bound(canonicalize(a, b));
      csv += format_real(b) + "," + format_real(k) + "," + format_real(r.value) + "," +
             std::string(to_string(r.bound_case)) + "\n";
    }
  }
  return csv;
}

inline void write_file_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << contents;
    f.flush();
    if (!f) throw IoError("failed writing '" + path + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path + "'");
  }
}

inline CommandOutput cmd_curve(const CurveArgs& c) {
  CommandOutput out;
  out.command = "curve";
  const std::vector<double> ks = curve_k_values(c);
  const std::vector<double> bs = curve_b_values(c);
  const std::string csv = curve_csv(bs, ks);

  nlohmann::json k_json = nlohmann::json::array();
  for (double k : ks) k_json.push_back(json_real(k));
  out.inputs = {{"anchors", c.anchors}, {"b_max", c.b_max}, {"b_min", c.b_min},
                {"b_steps", c.b_steps}, {"k_list", k_json},  {"out", c.out},
                {"spacing", c.spacing}};
  out.result = {{"rows", bs.size() * ks.size()}, {"b_values", bs.size()}, {"path", c.out}};
  if (c.out == "-") {
    out.raw_stdout = csv;
  } else {
    write_file_atomically(c.out, csv);
  }
  out.text = "wrote " + std::to_string(bs.size() * ks.size()) + " rows to " + c.out + "\n";
  return out;
}

inline CommandOutput cmd_quadratic(const std::string& a_text, const std::string& b_text) {
  CommandOutput out;
  out.command = "quadratic";
  if (a_text.empty() || b_text.empty()) throw UsageError("--A and --B are required");
  const double A = require_real("--A", a_text, false);
  const double B = require_real("--B", b_text, false);
  out.inputs = {{"A", A}, {"B", B}};
  const QuadraticEventResult r = quadratic_event_bound(A, B);

  out.result["value"] = r.value;
  out.result["tag"] = to_string(r.sharpness);
  out.result["roots"] = r.roots ? nlohmann::json{r.roots->first, r.roots->second} : nlohmann::json();
  if (r.reduced) {
    out.result["reduced"] = interval_json(r.reduced->interval);
    out.result["reduced"]["case"] = to_string(r.reduced->bound_case);
  } else {
    out.result["reduced"] = nullptr;
  }
  if (r.sharpness == Sharpness::ValidNotSharp) {
    out.warnings.push_back("root interval does not contain 0; the trivial bound 1 is reported");
  }

  out.text = "";
  if (r.roots) {
    out.text += "roots: " + format_text(r.roots->first) + ", " + format_text(r.roots->second) + "\n";
  } else {
    out.text += "roots: none (event is certain)\n";
  }
  if (r.reduced) {
    out.text += "reduced interval: a = " + format_text(r.reduced->interval.a()) +
                ", b = " + format_text(r.reduced->interval.b()) + "\n";
  }
  out.text += "bound: " + format_text(r.value) + "\ntag: " + std::string(to_string(r.sharpness)) + "\n";
  return out;
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Output is
/// written to `out` only once the command has finished.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sharp bounds on P(X not in (-a, b)) for zero-mean unit-variance X", "sharpbound"};
  app.require_subcommand(1);
  std::string format = "text";
  std::optional<double> tol;
  std::string tol_text;
  app.add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tol", tol_text,
                 "Check tolerance (default 1e-9 for closed-form checks, 5e-3 for grid oracles)");

  detail::IntervalArgs bound_args, extremal_args, certify_args, verify_args;
  detail::VerifyArgs verify_opts;
  detail::CurveArgs curve_opts;
  std::string certify_certificate, quad_a, quad_b;

  CLI::App* bound_cmd = app.add_subcommand("bound", "Sharp bound and case for (-a, b)");
  bound_args.attach(bound_cmd, true);
  CLI::App* extremal_cmd = app.add_subcommand("extremal", "Distribution attaining the bound");
  extremal_args.attach(extremal_cmd, true);
  CLI::App* certify_cmd = app.add_subcommand("certify", "Quadratic majorant certificate");
  certify_args.attach(certify_cmd, true);
  certify_cmd->add_option("--certificate", certify_certificate,
                          "Check c0,c1,c2 instead of the closed-form certificate");
  CLI::App* verify_cmd = app.add_subcommand("verify", "Numerical primal/dual/Monte Carlo checks");
  verify_args.attach(verify_cmd, true);
  verify_cmd->add_option("--grid-lo", verify_opts.grid_lo, "Grid lower end");
  verify_cmd->add_option("--grid-hi", verify_opts.grid_hi, "Grid upper end");
  verify_cmd->add_option("--grid-steps", verify_opts.grid_steps, "Number of grid points");
  verify_cmd->add_option("--mc-samples", verify_opts.mc_samples, "Monte Carlo sample count");
  verify_cmd->add_option("--seed", verify_opts.seed, "Monte Carlo seed (std::mt19937_64)");
  verify_cmd->add_flag("--force-extremal", verify_opts.force_extremal,
                       "Place the closed-form extremal atoms on the primal grid");
  verify_cmd->add_option("--certificate", verify_opts.certificate,
                         "Check c0,c1,c2 instead of the closed-form certificate");
  CLI::App* curve_cmd = app.add_subcommand("curve", "CSV of the family P_{kb,b}");
  curve_cmd->add_option("--k-list", curve_opts.k_list, "Comma-separated k >= 1 ('inf' allowed)");
  curve_cmd->add_option("--b-min", curve_opts.b_min, "Smallest b");
  curve_cmd->add_option("--b-max", curve_opts.b_max, "Largest b");
  curve_cmd->add_option("--b-steps", curve_opts.b_steps, "Number of b values");
  curve_cmd->add_option("--spacing", curve_opts.spacing, "linear or log");
  curve_cmd->add_option("--anchors", curve_opts.anchors,
                        "Extra b values merged into the grid (comma-separated)");
  curve_cmd->add_option("--out", curve_opts.out, "Output CSV path, '-' for stdout");
  CLI::App* quad_cmd = app.add_subcommand("quadratic", "Bound on P(X^2 + A X + B >= 0)");
  quad_cmd->add_option("--A", quad_a, "Linear coefficient");
  quad_cmd->add_option("--B", quad_b, "Constant coefficient");
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  CommandOutput result;
  try {
    if (!tol_text.empty()) {
      tol = detail::require_real("--tol", tol_text, false);
      if (!(*tol >= 0.0)) throw UsageError("--tol must be nonnegative");
    }
    const double closed_tol = tol.value_or(1e-9);
    if (bound_cmd->parsed()) {
      result = detail::cmd_bound(bound_args);
    } else if (extremal_cmd->parsed()) {
      result = detail::cmd_extremal(extremal_args, closed_tol);
    } else if (certify_cmd->parsed()) {
      result = detail::cmd_certify(certify_args, closed_tol, certify_certificate);
    } else if (verify_cmd->parsed()) {
      result = detail::cmd_verify(verify_args, verify_opts, tol);
    } else if (curve_cmd->parsed()) {
      result = detail::cmd_curve(curve_opts);
    } else {
      result = detail::cmd_quadratic(quad_a, quad_b);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const OracleError& e) {
    err << "oracle error: " << e.what() << "\n";
    return kExitOracle;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  }

  if (result.raw_stdout) {
    out << *result.raw_stdout;
  } else if (format == "json") {
    out << result.envelope().dump(2) << "\n";
  } else {
    out << result.text;
    for (const std::string& w : result.warnings) out << "warning: " << w << "\n";
  }
  if (format == "json" && result.raw_stdout) {
    // curve to stdout: the CSV is the output; the summary goes to stderr.
    err << result.envelope().dump(2) << "\n";
  } else if (format != "json" && result.raw_stdout) {
    for (const std::string& w : result.warnings) err << "warning: " << w << "\n";
  }
  out.flush();
  return result.exit_code;
}

}  // namespace sharpbound::cli
