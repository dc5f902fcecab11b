#include "knot818/error.hpp"

namespace knot818 {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownToken: return "UnknownToken";
    case ErrorCode::RoleMismatch: return "RoleMismatch";
    case ErrorCode::Multiplicity: return "Multiplicity";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::NonInteger: return "NonInteger";
    case ErrorCode::InvalidWord: return "InvalidWord";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::VertexRuleInapplicable: return "VertexRuleInapplicable";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::BadRadii: return "BadRadii";
    case ErrorCode::OriginOnCurve: return "OriginOnCurve";
    case ErrorCode::ParallelStrands: return "ParallelStrands";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::StartNotFound: return "StartNotFound";
    case ErrorCode::RoleMissing: return "RoleMissing";
    case ErrorCode::InvalidStartSpec: return "InvalidStartSpec";
    case ErrorCode::FixtureParseError: return "FixtureParseError";
    case ErrorCode::EmptyEnsemble: return "EmptyEnsemble";
    case ErrorCode::IncompleteAllocation: return "IncompleteAllocation";
  }
  return "Unknown";
}

}  // namespace knot818
