#pragma once

#include <stdexcept>
#include <string>

namespace cablejones {

/// Argument outside the real-analytic domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive quadrature could not reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cablejones
