#pragma once

#include <stdexcept>

namespace normeuclid {

// Argument outside the domain of the function (x <= 0 for log-gamma,
// kappa <= 1 for the Rogers constants, a broken field signature, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation at a pole: digamma at a non-positive integer, zeta at s <= 1.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An iterative scheme could not certify the requested accuracy.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A root bracket without a sign change.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search range that does not contain what was asked for.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace normeuclid
