#pragma once

#include <stdexcept>
#include <string>

namespace automorph {

/// Argument outside the interval an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Family parameter outside its admissible range; raised at construction.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Root finder was handed an interval without a sign change.
class NoBracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iteration cap reached before the residual tolerance was met.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace automorph
