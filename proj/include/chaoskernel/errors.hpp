#pragma once

#include <stdexcept>
#include <string>

namespace chaoskernel {

// Base for runtime numeric failures.  Messages name the offending operation;
// the CLI maps NumericError to exit code 1 and usage errors to exit code 2.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

class BranchCutError : public NumericError {
 public:
  using NumericError::NumericError;
};

class NoSignChangeError : public NumericError {
 public:
  using NumericError::NumericError;
};

class NonConvergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

class EnvelopeViolationError : public NumericError {
 public:
  using NumericError::NumericError;
};

class ToleranceUnreachableError : public NumericError {
 public:
  using NumericError::NumericError;
};

class BudgetExceededError : public NumericError {
 public:
  using NumericError::NumericError;
};

class OverflowGuardError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace chaoskernel
