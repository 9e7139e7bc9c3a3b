#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dglift/field.hpp"

namespace dglift {

/// Dense row-major matrix over a GroundField.
class Matrix {
 public:
  Matrix(GroundField field, std::size_t rows, std::size_t cols);

  static Matrix identity(GroundField field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GroundField field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> column(std::size_t c) const;
  std::vector<Scalar> row(std::size_t r) const;
  bool is_zero() const;

  std::vector<Scalar> apply(std::span<const Scalar> x) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&);

 private:
  GroundField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form with the row operations that produced it:
/// transform * original == reduced. Pivots are chosen as the first nonzero
/// entry in column order, scanning rows top to bottom.
struct Echelon {
  Matrix reduced;
  Matrix transform;
  std::vector<std::size_t> pivot_cols;  // pivot_cols[i] is the pivot of row i
};

Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

/// A linear map between labelled bases.
struct BlockMatrix {
  std::vector<std::string> source;
  std::vector<std::string> target;
  Matrix entries;  // target.size() x source.size()
};

struct Solution {
  std::vector<Scalar> x;
};

/// Proof that M x = v has no solution: a row vector y with y M = 0 and
/// y v != 0, together with the reduced augmented block it was read from.
struct Inconsistent {
  Matrix reduced_augmented;
  std::size_t rank = 0;
  std::size_t augmented_rank = 0;
  std::vector<Scalar> left_null;
  Scalar pairing;  // y . v
};

using SolveResult = std::variant<Solution, Inconsistent>;

/// Deterministic echelon solve; free unknowns are set to zero.
/// Throws Error(DimensionMismatch) if v does not match the target basis.
SolveResult linear_solve(const BlockMatrix& m, std::span<const Scalar> v);

/// True iff y m == 0 and y v != 0.
bool verify_inconsistency(const Matrix& m, std::span<const Scalar> v, std::span<const Scalar> y);

/// dim ker(outgoing) - rank(incoming) for C_{n+1} -> C_n -> C_{n-1}.
/// Throws Error(CompositionNonzero) when outgoing * incoming != 0 and
/// Error(DimensionMismatch) when the blocks do not compose.
std::size_t homology_dim(const Matrix& incoming, const Matrix& outgoing);

}  // namespace dglift
