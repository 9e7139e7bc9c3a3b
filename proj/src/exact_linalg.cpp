#include "dglift/exact_linalg.hpp"

#include <utility>

#include "dglift/error.hpp"

namespace dglift {

Matrix::Matrix(GroundField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(GroundField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  std::vector<Scalar> y(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero() && !x[c].is_zero()) y[r] += a * x[c];
    }
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product size mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Echelon row_reduce(const Matrix& m) {
  Echelon e{m, Matrix::identity(m.field(), m.rows()), {}};
  Matrix& a = e.reduced;
  Matrix& t = e.transform;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
      for (std::size_t c = 0; c < t.cols(); ++c) std::swap(t(pivot, c), t(row, c));
    }
    const Scalar inv = a(row, col).inverse();
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t c = 0; c < t.cols(); ++c) t(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Scalar factor = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
      for (std::size_t c = 0; c < t.cols(); ++c)
        if (!t(row, c).is_zero()) t(r, c) -= factor * t(row, c);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_cols.size(); }

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult linear_solve(const BlockMatrix& block, std::span<const Scalar> v) {
  const Matrix& m = block.entries;
  if (m.rows() != block.target.size() || m.cols() != block.source.size())
    throw Error(ErrorKind::DimensionMismatch, "block matrix does not match its bases");
  if (v.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side does not match target basis");

  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = v[r];
  }
  Echelon e = row_reduce(aug);
  const std::size_t n = e.pivot_cols.size();
  if (n > 0 && e.pivot_cols.back() == m.cols()) {
    Inconsistent bad{e.reduced, n - 1, n, e.transform.row(n - 1), m.field().zero()};
    for (std::size_t r = 0; r < m.rows(); ++r) bad.pairing += bad.left_null[r] * v[r];
    return bad;
  }
  Solution sol{std::vector<Scalar>(m.cols(), m.field().zero())};
  for (std::size_t i = 0; i < n; ++i) sol.x[e.pivot_cols[i]] = e.reduced(i, m.cols());
  return sol;
}

bool verify_inconsistency(const Matrix& m, std::span<const Scalar> v, std::span<const Scalar> y) {
  if (y.size() != m.rows() || v.size() != m.rows()) return false;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Scalar s = m.field().zero();
    for (std::size_t r = 0; r < m.rows(); ++r) s += y[r] * m(r, c);
    if (!s.is_zero()) return false;
  }
  Scalar pairing = m.field().zero();
  for (std::size_t r = 0; r < m.rows(); ++r) pairing += y[r] * v[r];
  return !pairing.is_zero();
}

std::size_t homology_dim(const Matrix& incoming, const Matrix& outgoing) {
  if (outgoing.cols() != incoming.rows())
    throw Error(ErrorKind::DimensionMismatch, "boundary blocks do not compose");
  if (outgoing.rows() > 0 && incoming.cols() > 0 && !(outgoing * incoming).is_zero())
    throw Error(ErrorKind::CompositionNonzero, "composite of consecutive boundary maps is nonzero");
  const std::size_t kernel = outgoing.cols() - rank(outgoing);
  return kernel - rank(incoming);
}

}  // namespace dglift
