#include "rankone/error.hpp"

namespace rankone {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidTuple: return "InvalidTuple";
    case ErrorCode::InvalidCutCount: return "InvalidCutCount";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::PremiseViolation: return "PremiseViolation";
    case ErrorCode::BeyondPrefix: return "BeyondPrefix";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TailCollapse: return "TailCollapse";
    case ErrorCode::LevelOrder: return "LevelOrder";
    case ErrorCode::PatternTooLong: return "PatternTooLong";
    case ErrorCode::UnspecifiedTail: return "UnspecifiedTail";
    case ErrorCode::CanonicalConditionFailed: return "CanonicalConditionFailed";
    case ErrorCode::NoRecurringAsymmetry: return "NoRecurringAsymmetry";
    case ErrorCode::IncompatibleRepresentations: return "IncompatibleRepresentations";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
  }
  return "Unknown";
}

}  // namespace rankone
