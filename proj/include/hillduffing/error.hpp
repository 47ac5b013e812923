#pragma once

#include <stdexcept>
#include <string>

namespace hd {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive integrator gave up (step cap reached or step size underflow).
class IntegrationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No sign change of |trace| - threshold inside the seeded parameter window.
class BracketNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hd
