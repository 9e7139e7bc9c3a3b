#include <doctest.h>

#include <random>

#include "dglift/error.hpp"
#include "dglift/exact_linalg.hpp"

using namespace dglift;

namespace {

const GroundField Q = GroundField::rationals();

Matrix from_rows(const std::vector<std::vector<long>>& rows) {
  Matrix m(Q, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Q.from_int(rows[i][j]);
  return m;
}

std::vector<Scalar> vec(GroundField f, const std::vector<long>& v) {
  std::vector<Scalar> out;
  for (long x : v) out.push_back(f.from_int(x));
  return out;
}

Matrix random_matrix(GroundField f, std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long> d(-2, 2);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(d(rng));
  return m;
}

// Rank by fraction-free elimination scanning columns right to left.
std::size_t oracle_rank(const Matrix& m) {
  std::vector<std::vector<Scalar>> a;
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(m.row(i));
  std::size_t r = 0;
  for (std::size_t jj = m.cols(); jj-- > 0 && r < a.size();) {
    std::size_t p = a.size();
    for (std::size_t i = a.size(); i-- > r;)
      if (!a[i][jj].is_zero()) p = i;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      const Scalar f = a[i][jj];
      const Scalar g = a[r][jj];
      for (std::size_t k = 0; k < m.cols(); ++k) a[i][k] = a[i][k] * g - a[r][k] * f;
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_SUITE("exact_linalg") {
  // The ∂-images of the J(4,4) basis in the basis v1..v6 of J(3,4):
  // -v1, v2+v4, v3-v5, v6.
  const Matrix boundary = from_rows({
      {-1, 0, 0, 0},
      {0, 1, 0, 0},
      {0, 0, 1, 0},
      {0, 1, 0, 0},
      {0, 0, -1, 0},
      {0, 0, 0, 1},
  });
  BlockMatrix block() {
    return {{"c1", "c2", "c3", "c4"}, {"v1", "v2", "v3", "v4", "v5", "v6"}, boundary};
  }

  TEST_CASE("v5 is not a boundary") {
    const auto v5 = vec(Q, {0, 0, 0, 0, 1, 0});
    const auto res = linear_solve(block(), v5);
    REQUIRE(std::holds_alternative<Inconsistent>(res));
    const auto& inc = std::get<Inconsistent>(res);
    CHECK(inc.rank == 4);
    CHECK(inc.augmented_rank == 5);
    CHECK(verify_inconsistency(boundary, v5, inc.left_null));
  }

  TEST_CASE("v6 is the image of the fourth column") {
    const auto res = linear_solve(block(), vec(Q, {0, 0, 0, 0, 0, 1}));
    REQUIRE(std::holds_alternative<Solution>(res));
    CHECK(std::get<Solution>(res).x == vec(Q, {0, 0, 0, 1}));
    CHECK(rank(boundary) == 4);
  }

  TEST_CASE("identity") {
    const BlockMatrix id{{"a", "b", "c"}, {"a", "b", "c"}, Matrix::identity(Q, 3)};
    const auto v = vec(Q, {3, -1, 7});
    CHECK(std::get<Solution>(linear_solve(id, v)).x == v);
  }

  TEST_CASE("dimension mismatch") {
    try {
      linear_solve(block(), vec(Q, {1, 2}));
      FAIL("accepted a short vector");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
  }

  TEST_CASE("homology_dim") {
    CHECK(homology_dim(Matrix(Q, 3, 0), Matrix(Q, 0, 3)) == 3);
    CHECK(homology_dim(Matrix(Q, 0, 0), Matrix(Q, 0, 0)) == 0);
    const Matrix d2 = from_rows({{1}, {1}});
    const Matrix d1 = from_rows({{1, -1}});
    CHECK(homology_dim(d2, d1) == 0);
    try {
      homology_dim(d2, from_rows({{1, 1}}));
      FAIL("accepted a non-complex");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::CompositionNonzero);
    }
  }

  TEST_CASE("rank-nullity, solutions and certificates on random blocks") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> dim(0, 6);
    for (const GroundField f : {Q, GroundField::prime(3)}) {
      for (int i = 0; i < 200; ++i) {
        const std::size_t r = dim(rng), c = dim(rng);
        const Matrix m = random_matrix(f, rng, r, c);
        const auto ker = kernel_basis(m);
        CHECK(rank(m) + ker.size() == c);
        for (const auto& k : ker)
          for (const auto& x : m.apply(k)) CHECK(x.is_zero());
        if (f.is_rational()) CHECK(rank(m) == oracle_rank(m));
        const Echelon e = row_reduce(m);
        CHECK(e.transform * m == e.reduced);

        const Matrix v = random_matrix(f, rng, r, 1);
        const auto vv = v.column(0);
        BlockMatrix b{std::vector<std::string>(c, "s"), std::vector<std::string>(r, "t"), m};
        const auto res = linear_solve(b, vv);
        if (const auto* s = std::get_if<Solution>(&res)) {
          CHECK(m.apply(s->x) == vv);
        } else {
          CHECK(verify_inconsistency(m, vv, std::get<Inconsistent>(res).left_null));
        }
      }
    }
  }

  TEST_CASE("homology_dim agrees with kernel and image computed separately") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int i = 0; i < 100; ++i) {
      // C2 -> C1 -> C0 with d1 d2 = 0: take d2 from random combinations of ker d1.
      const std::size_t n0 = dim(rng), n1 = dim(rng), n2 = dim(rng);
      const Matrix d1 = random_matrix(Q, rng, n0, n1);
      const auto ker = kernel_basis(d1);
      Matrix d2(Q, n1, n2);
      const Matrix mix = random_matrix(Q, rng, ker.size(), n2);
      for (std::size_t k = 0; k < ker.size(); ++k)
        for (std::size_t j = 0; j < n2; ++j)
          for (std::size_t row = 0; row < n1; ++row) d2(row, j) += ker[k][row] * mix(k, j);
      CHECK((d1 * d2).is_zero());
      CHECK(homology_dim(d2, d1) == (n1 - oracle_rank(d1)) - oracle_rank(d2));
    }
  }
}
