#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orthograph {

/// Caller passed mismatched or malformed arguments.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Argument lies outside the mathematical domain of the operation
/// (inverting a non-unit, canonicalizing a tuple without a unit coordinate).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Invalid configuration (bad n, nu, delta, z, budgets).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The requested object would exceed the configured size cap.
struct ResourceError : std::runtime_error {
  ResourceError(const std::string &what, std::uint64_t predicted)
      : std::runtime_error(what), predicted_count(predicted) {}
  std::uint64_t predicted_count;
};

/// An internal mathematical invariant was violated.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace orthograph
