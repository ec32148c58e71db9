#pragma once

#include <stdexcept>
#include <string>

namespace ppart {

/// Operands of a binary operation have different qubit counts.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bad numeric argument (mode index out of range, n too small, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A fermionic term outside the supported one-/two-body shapes.
class UnsupportedTerm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input to an algorithm breaks its documented precondition, or an internal
/// invariant failed to hold.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed or invalid schedule / coefficients file.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ppart
