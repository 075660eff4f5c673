#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace exotic {

enum class ErrorCode {
  VarSetMismatch,
  MissingImage,
  UnknownVariable,
  NotDivisible,
  DivisionByZero,
  DimensionMismatch,
  NonTerminatingOrder,
  ParseError,
  InvalidFormat,
  InvalidParams,
  ZeroPolynomial,
  NotAppropriate,
  UncertifiedGrading,
  DegreeNotStable,
  WrongRing,
  NotWellDefinedOnQuotient,
  NotCertifiedNilpotent,
  GradedNotWellDefined,
  NonzeroConstantTerm,
  VariableNameCollision,
  DivisibilityFailure,
  UnknownSite,
  NotContractible,
  Disconnected,
  WrongShape,
  NotCoprime,
  NotAComplex,
  NotRegular,
  NotPrime,
  BadPrime,
};

std::string_view to_string(ErrorCode code);

// Domain error raised by every library operation. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace exotic
