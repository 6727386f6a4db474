// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace sharpbound {

/// Raised when an input violates the hypotheses of a bound (non-positive
/// endpoints, NaN, an interval that does not contain the mean, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised by the numerical oracles when they cannot produce an answer.
class OracleError : public std::runtime_error {
 public:
  explicit OracleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sharpbound
