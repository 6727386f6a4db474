// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "sharpbound/errors.hpp"
#include "sharpbound/interval.hpp"

namespace sharpbound {

struct Atom {
  double location;
  double mass;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// A finitely supported probability distribution.
///
/// Atoms are kept sorted by location with no duplicates and no zero-mass
/// entries. The moment constraints (mean 0, second moment 1) are not
/// enforced at construction; see `satisfies_moment_constraints`.
class DiscreteDistribution {
 public:
  /// Masses below this are dropped.
  static constexpr double kDropThreshold = 1e-15;
  /// Largest renormalization applied after dropping atoms.
  static constexpr double kMaxRenormalization = 1e-14;

  DiscreteDistribution() = default;

  /// Sorts, merges coincident locations, drops tiny masses and renormalizes
  /// by at most kMaxRenormalization. Negative masses beyond the drop
  /// threshold or non-finite values throw DomainError.
  static DiscreteDistribution from_atoms(std::vector<Atom> atoms) {
    for (const Atom& atom : atoms) {
      if (!std::isfinite(atom.location) || !std::isfinite(atom.mass)) {
        throw DomainError("distribution atoms must be finite");
      }
      if (atom.mass < -kDropThreshold) {
        throw DomainError("distribution masses must be nonnegative");
      }
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& l, const Atom& r) { return l.location < r.location; });
    std::vector<Atom> merged;
    merged.reserve(atoms.size());
    for (const Atom& atom : atoms) {
      if (!merged.empty() && merged.back().location == atom.location) {
        merged.back().mass += atom.mass;
      } else {
        merged.push_back(atom);
      }
    }
    std::erase_if(merged, [](const Atom& atom) { return atom.mass < kDropThreshold; });
    if (merged.empty()) {
      throw DomainError("distribution has no atoms with positive mass");
    }
    double total = 0.0;
    for (const Atom& atom : merged) total += atom.mass;
    if (std::abs(total - 1.0) <= kMaxRenormalization) {
      for (Atom& atom : merged) atom.mass /= total;
    }
    DiscreteDistribution out;
    out.atoms_ = std::move(merged);
    return out;
  }

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  double total_mass() const noexcept {
    double sum = 0.0;
    for (const Atom& atom : atoms_) sum += atom.mass;
    return sum;
  }

  double mean() const noexcept {
    double sum = 0.0;
    for (const Atom& atom : atoms_) sum += atom.mass * atom.location;
    return sum;
  }

  double second_moment() const noexcept {
    double sum = 0.0;
    for (const Atom& atom : atoms_) sum += atom.mass * atom.location * atom.location;
    return sum;
  }

  double variance() const noexcept {
    const double m = mean();
    return second_moment() - m * m;
  }

  /// Probability of {x <= -a} u {x >= b}; endpoints count as excluded.
  double exclusion_mass(const IntervalSpec& interval) const noexcept {
    double sum = 0.0;
    for (const Atom& atom : atoms_) {
      if (interval.excludes(atom.location)) sum += atom.mass;
    }
    return sum;
  }

  bool satisfies_moment_constraints(double tol) const noexcept {
    return std::abs(total_mass() - 1.0) <= tol && std::abs(mean()) <= tol &&
           std::abs(second_moment() - 1.0) <= tol;
  }

  friend bool operator==(const DiscreteDistribution&, const DiscreteDistribution&) = default;

 private:
  std::vector<Atom> atoms_;
};

}  // namespace sharpbound
