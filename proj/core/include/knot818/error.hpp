#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace knot818 {

enum class ErrorCode : std::uint8_t {
  // notation
  UnknownToken,
  RoleMismatch,
  Multiplicity,
  OutOfRange,
  Empty,
  NonInteger,
  // diagram / braid
  InvalidWord,
  NotAKnot,
  VertexRuleInapplicable,
  ParityViolation,
  // geometry
  BadRadii,
  OriginOnCurve,
  ParallelStrands,
  // algebra
  InexactDivision,
  ZeroPolynomial,
  ZeroArgument,
  DivisionByZero,
  // traversal / analysis
  StartNotFound,
  RoleMissing,
  InvalidStartSpec,
  FixtureParseError,
  EmptyEnsemble,
  IncompleteAllocation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code.
class KnotError : public std::runtime_error {
 public:
  KnotError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace knot818
