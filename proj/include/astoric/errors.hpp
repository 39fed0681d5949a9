#pragma once

#include <stdexcept>
#include <string>

namespace astoric {

/// Malformed or out-of-contract input (bad JSON, dimension mismatch,
/// violated precondition).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A truncated computation needs coefficients beyond the known window.
class PrecisionExhausted : public std::runtime_error {
 public:
  explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Exact integer arithmetic left the range of the machine word.
class ArithmeticOverflow : public std::overflow_error {
 public:
  explicit ArithmeticOverflow(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace astoric
