#pragma once

#include <stdexcept>
#include <string>

namespace hodge_asym {

enum class ErrorKind {
  InvalidInput,
  ModulusMismatch,
  NotFoundWithinBound,
  SearchExhausted,
  EqualRanks,
  RelationViolated,
  EvenDegree,
  NonSymmetricFactor,
  NonNegativeDelta,
  InvalidTarget,
  ScopeViolation,
  VerificationFailed,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::NotFoundWithinBound: return "NotFoundWithinBound";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::EqualRanks: return "EqualRanks";
    case ErrorKind::RelationViolated: return "RelationViolated";
    case ErrorKind::EvenDegree: return "EvenDegree";
    case ErrorKind::NonSymmetricFactor: return "NonSymmetricFactor";
    case ErrorKind::NonNegativeDelta: return "NonNegativeDelta";
    case ErrorKind::InvalidTarget: return "InvalidTarget";
    case ErrorKind::ScopeViolation: return "ScopeViolation";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace hodge_asym
