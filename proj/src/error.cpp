#include "dglift/error.hpp"

namespace dglift {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::NonMonomialRelation: return "NonMonomialRelation";
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::CycleViolation: return "CycleViolation";
    case ErrorKind::GradingViolation: return "GradingViolation";
    case ErrorKind::ForwardReference: return "ForwardReference";
    case ErrorKind::MixedAlgebras: return "MixedAlgebras";
    case ErrorKind::TriangularityViolation: return "TriangularityViolation";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DifferentialSquareNonzero: return "DifferentialSquareNonzero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::CompositionNonzero: return "CompositionNonzero";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndeclaredName: return "UndeclaredName";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

bool is_mathematical(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UndeclaredName:
    case ErrorKind::DuplicateName:
    case ErrorKind::UsageError:
      return false;
    default:
      return true;
  }
}

}  // namespace dglift
