#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rankone {

enum class ErrorCode {
  InvalidTuple,
  InvalidCutCount,
  LengthMismatch,
  PremiseViolation,
  BeyondPrefix,
  BudgetExceeded,
  TailCollapse,
  LevelOrder,
  PatternTooLong,
  UnspecifiedTail,
  CanonicalConditionFailed,
  NoRecurringAsymmetry,
  IncompatibleRepresentations,
  InvalidParams,
  InvalidCertificate,
};

std::string_view error_name(ErrorCode code) noexcept;

// Domain error raised by every library operation. The CLI reports name() verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace rankone
