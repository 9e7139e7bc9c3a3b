#pragma once

#include <stdexcept>
#include <string>

namespace dglift {

enum class ErrorKind {
  // coefficients
  DuplicateGenerator,
  InvalidDegree,
  NonMonomialRelation,
  MixedRings,
  InvalidField,
  // free_dga
  CycleViolation,
  GradingViolation,
  ForwardReference,
  MixedAlgebras,
  // semifree_module
  TriangularityViolation,
  DegreeMismatch,
  DifferentialSquareNonzero,
  // exact_linalg
  DimensionMismatch,
  CompositionNonzero,
  // cli_format
  SyntaxError,
  UndeclaredName,
  DuplicateName,
  UsageError,
};

const char* to_string(ErrorKind kind);

/// True for errors that reject a well-formed input on mathematical grounds
/// (as opposed to syntax or usage problems).
bool is_mathematical(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, int line = 0)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// 1-based source line, or 0 when the error did not come from a file.
  int line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  int line_;
};

}  // namespace dglift
