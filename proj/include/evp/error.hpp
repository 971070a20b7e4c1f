#pragma once

#include <stdexcept>
#include <string>

namespace evp {

/// Every recoverable domain failure carries one of these codes. The CLI maps
/// DomainError to exit code 2 and BudgetError to exit code 3.
enum class ErrorCode {
  IncompleteTable,
  OutOfBoundsValue,
  IndexBeyondHorizon,
  WordOutsideSpace,
  SlalomTooWide,
  LengthMismatch,
  SpecMismatch,
  EnumerationMismatch,
  SetTooSmall,
  NotLinear,
  IndexOutOfField,
  DimensionMismatch,
  DegenerateBlock,
  PreconditionViolated,
  AmbiguousValue,
  NotStrictlyIncreasing,
  InfeasibleOverFiniteField,
  AuditFailure,
  HorizonTooShort,
  IndexOrder,
  NotAChain,
  HeightExceeded,
  NotCompatible,
  UnknownNode,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what)
      : std::runtime_error("BudgetExceeded: " + what) {}
};

}  // namespace evp
