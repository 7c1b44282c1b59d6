#pragma once

#include <stdexcept>
#include <string>

namespace faulhaber {

// Raised when a computed object fails an identity it is supposed to satisfy.
// Domain errors (bad index, division by zero) use the std exception types.
enum class Violation {
  NonzeroRemainder,
  NotInBasis,
  RaabeViolation,
  ChainInconsistency,
  JacobiRecurrence,
  SchroederIdentity,
  BnFp,
  Appell,
  HoppeMismatch,
  ClosedFormMismatch,
  RecurrenceMismatch,
  LambdaRecurrence,
  SymmetryViolation,
  RouteMismatch,
  BridgeMismatch,
  KnuthSupport,
  MethodDisagreement,
  StrategyDisagreement,
};

const char* to_string(Violation v) noexcept;

class IdentityError : public std::logic_error {
 public:
  IdentityError(Violation kind, const std::string& what)
      : std::logic_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  Violation kind() const noexcept { return kind_; }

 private:
  Violation kind_;
};

inline const char* to_string(Violation v) noexcept {
  switch (v) {
    case Violation::NonzeroRemainder: return "NonzeroRemainder";
    case Violation::NotInBasis: return "NotInBasis";
    case Violation::RaabeViolation: return "RaabeViolation";
    case Violation::ChainInconsistency: return "ChainInconsistency";
    case Violation::JacobiRecurrence: return "JacobiRecurrence";
    case Violation::SchroederIdentity: return "SchroederIdentity";
    case Violation::BnFp: return "BnFp";
    case Violation::Appell: return "Appell";
    case Violation::HoppeMismatch: return "HoppeMismatch";
    case Violation::ClosedFormMismatch: return "ClosedFormMismatch";
    case Violation::RecurrenceMismatch: return "RecurrenceMismatch";
    case Violation::LambdaRecurrence: return "LambdaRecurrence";
    case Violation::SymmetryViolation: return "SymmetryViolation";
    case Violation::RouteMismatch: return "RouteMismatch";
    case Violation::BridgeMismatch: return "BridgeMismatch";
    case Violation::KnuthSupport: return "KnuthSupport";
    case Violation::MethodDisagreement: return "MethodDisagreement";
    case Violation::StrategyDisagreement: return "StrategyDisagreement";
  }
  return "Unknown";
}

}  // namespace faulhaber
