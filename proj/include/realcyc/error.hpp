#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace realcyc {

enum class ErrorKind {
  ConductorMismatch,
  DivisionByZero,
  NotDivisible,
  DimensionMismatch,
  NotSquare,
  Singular,
  ClosureCapExceeded,
  NotIrreducible,
  NotRealValued,
  QuaternionicType,
  InternalInvariantViolation,
  IntertwinerCheckFailed,
  NotScalar,
  MuNotReal,
  NormEquationNotSolved,
  XiSearchExhausted,
  UnknownFixture,
  ParseError,
  VerificationFailed,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ConductorMismatch: return "ConductorMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotRealValued: return "NotRealValued";
    case ErrorKind::QuaternionicType: return "QuaternionicType";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::IntertwinerCheckFailed: return "IntertwinerCheckFailed";
    case ErrorKind::NotScalar: return "NotScalar";
    case ErrorKind::MuNotReal: return "MuNotReal";
    case ErrorKind::NormEquationNotSolved: return "NormEquationNotSolved";
    case ErrorKind::XiSearchExhausted: return "XiSearchExhausted";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace realcyc
