#pragma once

#include <stdexcept>
#include <string>

namespace ncstat {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Table lookup out of range (Bernoulli index, EM order).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// No real bound state on the selected Nikiforov-Uvarov branch
/// (negative discriminant, or a division by a vanishing beta3).
class BranchError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Partition function evaluated to a non-positive value.
class EvaluationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Inconsistent request: wrong mode, mismatched case flags, bad grid.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A truncated series whose certified tail exceeds the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, long suggested_cutoff)
      : std::runtime_error(what), suggested_cutoff_(suggested_cutoff) {}

  long suggested_cutoff() const noexcept { return suggested_cutoff_; }

 private:
  long suggested_cutoff_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ncstat
