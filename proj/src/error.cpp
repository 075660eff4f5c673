#include "exotic/error.hpp"

namespace exotic {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::VarSetMismatch: return "VarSetMismatch";
    case ErrorCode::MissingImage: return "MissingImage";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonTerminatingOrder: return "NonTerminatingOrder";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidFormat: return "InvalidFormat";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotAppropriate: return "NotAppropriate";
    case ErrorCode::UncertifiedGrading: return "UncertifiedGrading";
    case ErrorCode::DegreeNotStable: return "DegreeNotStable";
    case ErrorCode::WrongRing: return "WrongRing";
    case ErrorCode::NotWellDefinedOnQuotient: return "NotWellDefinedOnQuotient";
    case ErrorCode::NotCertifiedNilpotent: return "NotCertifiedNilpotent";
    case ErrorCode::GradedNotWellDefined: return "GradedNotWellDefined";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::VariableNameCollision: return "VariableNameCollision";
    case ErrorCode::DivisibilityFailure: return "DivisibilityFailure";
    case ErrorCode::UnknownSite: return "UnknownSite";
    case ErrorCode::NotContractible: return "NotContractible";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::BadPrime: return "BadPrime";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
      code_(code),
      detail_(detail) {}

}  // namespace exotic
