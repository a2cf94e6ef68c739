#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: dimension mismatches, empty lists,
/// unparsable files, unknown identifiers.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical hypothesis of the requested operation does not hold
/// (non-PSD operand, exponent out of range, non-contraction, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Eigenvalue outside the domain of a scalar function.
class DomainError : public PreconditionError {
 public:
  DomainError(const std::string& what, double offending)
      : PreconditionError(what), offending_eigenvalue_(offending) {}
  double offending_eigenvalue() const noexcept { return offending_eigenvalue_; }

 private:
  double offending_eigenvalue_;
};

/// The weighted condition on the maps (sum of weighted phi_i(I) bounded by
/// the weighted identity) fails. Kept distinct from an inequality violation.
class ConditionError : public PreconditionError {
 public:
  ConditionError(const std::string& what, double min_gap)
      : PreconditionError(what), min_gap_(min_gap) {}
  double min_gap() const noexcept { return min_gap_; }

 private:
  double min_gap_;
};

/// The eigensolver did not meet its reconstruction/orthonormality budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace bohr
