#pragma once

#include <stdexcept>
#include <string>

namespace symcubic {

/// Malformed or out-of-contract input (wrong arity, non-homogeneous form,
/// bad descriptor, dimension mismatch). Maps to CLI exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A computed cross-check disagreed (n != n', seed disagreement, Hodge sums).
/// Maps to CLI exit code 1.
class VerificationFailure : public std::runtime_error {
 public:
  explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

/// A bounded search or sampling loop ran out of budget.
class SearchExhausted : public std::runtime_error {
 public:
  explicit SearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace symcubic
