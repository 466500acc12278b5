#pragma once

#include <stdexcept>
#include <string>

namespace psik {

/// Arguments outside the domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation at (or contour enclosing) a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Division by a zero leading kernel term.
class DivisionByZeroError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A truncated series, asymptotic expansion or quadrature could not reach its
/// target within the allowed term/panel budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quantity that must be real carried an imaginary part above noise level.
class NoiseFloorExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace psik
