#pragma once

#include <stdexcept>
#include <string>

namespace g2crystal {

// Operands built over different variable tables, or a malformed expression.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Division by the zero function, zero denominators after substitution, and
// similar mathematically undefined requests.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A denominator vanished at a concrete point. `point()` is a printable form of
// the offending assignment.
class EvaluationError : public DomainError {
 public:
  EvaluationError(const std::string& what, std::string point)
      : DomainError(what + " at " + point), point_(std::move(point)) {}

  const std::string& point() const noexcept { return point_; }

 private:
  std::string point_;
};

// Numerator or denominator became zero after the monomial substitution
// x_k -> t^{xi_k} used by the valuation.
class UndefinedValuation : public DomainError {
 public:
  using DomainError::DomainError;
};

// Tropicalization was requested for an expression without a
// subtraction-free witness.
class NotPositiveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace g2crystal
