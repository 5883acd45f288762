#pragma once

#include <stdexcept>
#include <string>

namespace fracburgers {

/// Raised when a caller violates a documented precondition (bad parameter
/// range, mismatched grids, malformed configuration).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation produces non-finite values or a quadrature
/// cannot be resolved within its budget.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fracburgers
