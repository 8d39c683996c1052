#pragma once

#include <stdexcept>
#include <string>

namespace cmfock {

// Failure codes surfaced through the CLI as machine-readable diagnostics.
enum class ErrorCode {
  NotDivisible,
  InvalidPair,
  FlavorMismatch,
  TruncationTooSmall,
  ShapeMismatch,
  InfeasibleKey,
  NotSimple,
  NotCanonicalIndex,
  ScheduleFailure,
  TriangularityFailure,
  NegativeMultiplicity,
  HypothesisViolated,
  BadInput,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::FlavorMismatch: return "FlavorMismatch";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InfeasibleKey: return "InfeasibleKey";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotCanonicalIndex: return "NotCanonicalIndex";
    case ErrorCode::ScheduleFailure: return "ScheduleFailure";
    case ErrorCode::TriangularityFailure: return "TriangularityFailure";
    case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw DomainError(code, detail);
}

}  // namespace cmfock
