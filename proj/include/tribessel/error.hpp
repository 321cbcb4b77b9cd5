#pragma once

#include <stdexcept>
#include <string>

namespace tribessel {

/// Precondition violations: negative orders, malformed indices, bad flags.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The inputs are well formed but the requested evaluator does not apply.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// lambda1 + lambda2 + lambda3 odd: the 3j divisor of the analytic routes vanishes.
class ParityViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Momenta outside the region the closed form was derived for (beta = 0).
class OutsideDerivationDomain : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The defining integral does not converge (origin or tail).
class ConvergenceDomain : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A recurrence denominator vanishes; fall back to the Jacobi route.
class SingularRecurrence : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Quadrature or tail acceleration failed to meet its tolerance.
class NonConvergence : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotInTable : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace tribessel
