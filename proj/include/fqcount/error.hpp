#pragma once

#include <stdexcept>
#include <string>

namespace fqcount {

/// Argument outside the operation's domain (non-prime p, zero divisor, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A curve-family hypothesis does not hold for the given coefficients.
/// The message names the violated hypothesis.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An enumeration would exceed its evaluation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact integer result does not fit in 64 bits.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace fqcount
