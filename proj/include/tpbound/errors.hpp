#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tpbound {

/// Machine-readable error categories. The CLI reports these verbatim.
enum class ErrorCode {
  InvalidInput,
  DuplicateIndex,
  RankMismatch,
  SyntaxError,
  ArityError,
  SizeMismatch,
  St0Violation,
  ConditionMViolation,
  PreconditionViolation,
  NonPositiveWeight,
  NotTotallyPositive,
  ZeroDenominator,
  BudgetExceeded,
  InternalInvariant,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::SyntaxError,
              message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  /// Zero-based character offset into the parsed text.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace tpbound
