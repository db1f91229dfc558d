#pragma once

#include <stdexcept>
#include <string>

namespace orfkit {

/// Raised when a caller violates a precondition (bad dimension, tolerance, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an algorithm cannot deliver its accuracy contract
/// (series cancellation, zero bracketing, rank-deficient draw).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File system and parse failures. The message always names the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace orfkit
