#pragma once

#include <stdexcept>
#include <string>

namespace sea {

// Bad arguments: out-of-range ids, mismatched dimensions, non-Hermitian input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A finite table that breaks one of the effect-algebra axioms.
class AxiomViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAnEffect : public std::domain_error {
 public:
  NotAnEffect(const std::string& what, double eigenvalue)
      : std::domain_error(what), eigenvalue_(eigenvalue) {}

  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

// Operation is defined only for some inputs (e.g. comparability of a
// non-commuting pair).
class NotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sea
