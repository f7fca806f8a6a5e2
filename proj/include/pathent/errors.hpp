#pragma once

#include <stdexcept>
#include <string>

namespace pathent {

// Bad parameter value (outside the documented range for the operation).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain of the function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed or insufficient data (unnormalized pdf, too few points, ...).
class DataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numeric procedure failed to reach its target (series cap hit,
// quadrature error estimate above tolerance, ...).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pathent
