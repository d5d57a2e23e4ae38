#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matroidkit {

enum class ErrorKind {
  kEmptyFamily,
  kCardinalityMismatch,
  kAxiomViolation,
  kBadParams,
  kBadElement,
  kGroundSetExhausted,
  kNotCircuitHyperplane,
  kNotAFlat,
  kNotAModularCut,
  kRestrictionMismatch,
  kNotModularFlat,
  kNotATriangle,
  kNotATriad,
  kNotThreeConnected,
  kBadPartition,
  kBadInput,
  kBadSize,
  kNotExactlyThreeSeparating,
  kHypothesisUnmet,
  kConstructionFailed,
  kParseError,
};

std::string_view error_kind_name(ErrorKind kind);

class MatroidError : public std::runtime_error {
 public:
  MatroidError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace matroidkit
