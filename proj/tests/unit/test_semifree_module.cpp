#include <doctest.h>

#include "dglift/sampling.hpp"
#include "dglift/selftest.hpp"
#include "fixtures.hpp"

using namespace dglift;
using fixtures::cone;
using fixtures::Names;
using fixtures::sigma_basis;

namespace {

ErrorKind build_error(const AlgebraPtr& alg, const ModuleSpec& spec) {
  try {
    build_module(alg, spec);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("module was accepted");
  return ErrorKind::UsageError;
}

// Random triangular spec with degree-compatible but otherwise arbitrary ∂.
ModuleSpec random_spec(Sampler& s, const AlgebraPtr& alg) {
  ModuleSpec spec;
  const std::size_t k = static_cast<std::size_t>(s.uniform(1, 3));
  for (std::size_t l = 0; l < k; ++l) {
    const int h = l == 0 ? 0 : spec.basis[l - 1].hdeg + s.uniform(1, 3);
    const int w = l == 0 ? 0 : *spec.basis[l - 1].wdeg + s.uniform(0, 3);
    spec.basis.push_back({"e" + std::to_string(l), h, w});
    ModuleElement d(alg);
    for (std::size_t m = 0; m < l; ++m) {
      const Bidegree need{h - spec.basis[m].hdeg - 1, w - *spec.basis[m].wdeg};
      if (need.hdeg < 0 || need.wdeg < 0) continue;
      d += ModuleElement::basis_times(m, s.element(alg, need));
    }
    spec.differentials.push_back(d);
  }
  return spec;
}

}  // namespace

TEST_SUITE("semifree_module") {
  TEST_CASE("the example modules") {
    const Names b(fixtures::example_algebra(fixtures::qxy()));
    const auto n = cone(b.alg, b.X * b.Y * b.y);
    CHECK(n->basis()[1].bidegree() == Bidegree{4, 4});
    CHECK(n->boundary_of_basis(1) == ModuleElement::basis_times(0, b.Y * b.X * b.y));
    CHECK(n->to_string(n->boundary_of_basis(1)) == "e*X*Y*y");

    const Names bp(fixtures::example_algebra(fixtures::qxy(true)));
    CHECK(cone(bp.alg, bp.X * bp.Y * bp.x, 0, "u", "up")->rank() == 2);
    // Over Q[x,y]/(xy) the differential of M does not square to zero:
    // ∂²u' = u·d(XYx) = u·Y·x².
    ModuleSpec m;
    m.basis = {{"u", 0, std::nullopt}, {"up", 4, std::nullopt}};
    m.differentials = {ModuleElement(b.alg), ModuleElement::basis_times(0, b.X * b.Y * b.x)};
    CHECK(build_error(b.alg, m) == ErrorKind::DifferentialSquareNonzero);

    ModuleSpec bad;
    bad.basis = {{"e", 0, std::nullopt}, {"ep", 2, std::nullopt}};
    bad.differentials = {ModuleElement(b.alg), ModuleElement::basis_times(0, b.X)};
    CHECK(build_error(b.alg, bad) == ErrorKind::DifferentialSquareNonzero);
  }

  TEST_CASE("other construction errors") {
    const Names b(fixtures::example_algebra(fixtures::qxy()));
    ModuleSpec s;
    s.basis = {{"e", 0, std::nullopt}, {"e", 1, std::nullopt}};
    s.differentials = {ModuleElement(b.alg), ModuleElement(b.alg)};
    CHECK(build_error(b.alg, s) == ErrorKind::DuplicateGenerator);

    s.basis = {{"e", 0, std::nullopt}, {"f", 2, std::nullopt}};
    s.differentials = {ModuleElement::basis_times(1, b.X), ModuleElement(b.alg)};
    CHECK(build_error(b.alg, s) == ErrorKind::TriangularityViolation);

    s.differentials = {ModuleElement(b.alg), ModuleElement::basis_times(0, b.Y)};
    CHECK(build_error(b.alg, s) == ErrorKind::DegreeMismatch);

    s.basis = {{"e", 0, std::nullopt}, {"f", 1, 5}};
    s.differentials = {ModuleElement(b.alg), ModuleElement::basis_times(0, b.x)};
    CHECK(build_error(b.alg, s) == ErrorKind::DegreeMismatch);

    s.differentials = {ModuleElement(b.alg)};
    CHECK(build_error(b.alg, s) == ErrorKind::DimensionMismatch);
  }

  TEST_CASE("differentials of N and N⊗J") {
    const Names b(fixtures::example_algebra(fixtures::qxy()));
    const auto n = cone(b.alg, b.X * b.Y * b.y);
    const auto e = n->basis_element(0), ep = n->basis_element(1);
    CHECK(n->diff(ep) == e * (b.X * b.Y * b.y));
    CHECK(n->diff(e * b.x).is_zero());
    CHECK(n->diff(n->diff(ep * b.X)).is_zero());

    const auto witness = TensorJElement::basis_tensor(0, universal_delta(b.Yn(2)));
    CHECK(n->diff(witness) == TensorJElement::basis_tensor(0, universal_delta(b.X * b.Y * b.y)));
    CHECK(n->diff(TensorJElement(b.alg)).is_zero());
    CHECK(n->diff(n->diff(TensorJElement::basis_tensor(1, sigma_basis(b.X, b.Y)))).is_zero());
  }

  TEST_CASE("graded splittings of N⊗B^e") {
    const Names b(fixtures::example_algebra(fixtures::qxy()));
    const auto n = cone(b.alg, b.X * b.Y * b.y);
    const auto e = n->basis_element(0), ep = n->basis_element(1);
    TensorTerms expected;
    expected.add(TensorKey{0, b.alg->unit(), b.alg->variable_power(0), b.alg->ring()->unit()}, b.s(1));
    CHECK(rho_N(*n, e * b.X) == TensorEnvElement(b.alg, expected));
    CHECK(sigma_N(*n, rho_N(*n, e * (b.Y * b.x))).is_zero());
    const auto defect = n->diff(rho_N(*n, ep)) - rho_N(*n, n->diff(ep));
    CHECK(defect == iota_N(*n, TensorJElement::basis_tensor(0, universal_delta(b.X * b.Y * b.y))));
    CHECK(n->to_string(defect) == "-e⊗1^o⊗(X*Y)·y + e⊗(X*Y)^o⊗1·y");
  }

  TEST_CASE("acceptance matches a brute-force ∂² check") {
    Sampler s(17);
    std::size_t accepted = 0, rejected = 0;
    for (const auto& alg : selftest_algebras()) {
      for (int i = 0; i < 60; ++i) {
        const ModuleSpec spec = random_spec(s, alg);
        const auto loose = build_module(alg, spec, false);
        bool square_zero = true;
        for (std::size_t l = 0; l < loose->rank(); ++l)
          square_zero = square_zero && loose->diff(loose->diff(loose->basis_element(l))).is_zero();
        bool ok = true;
        try {
          build_module(alg, spec);
        } catch (const Error& e) {
          CHECK(e.kind() == ErrorKind::DifferentialSquareNonzero);
          ok = false;
        }
        CHECK(ok == square_zero);
        (ok ? accepted : rejected) += 1;
      }
    }
    CHECK(accepted > 0);
    CHECK(rejected > 0);
  }

  TEST_CASE("properties on random modules") {
    Sampler s(29);
    for (const auto& alg : selftest_algebras()) {
      for (int i = 0; i < 40; ++i) {
        const auto n = s.module(alg, 4, {6, 6});
        const Bidegree top = n->basis().back().bidegree() + Bidegree{2, 2};
        const auto v = s.module_element(*n, s.bidegree(top));
        const auto t = s.tensor_j(*n, s.bidegree(top));
        CHECK(n->diff(n->diff(v)).is_zero());
        CHECK(n->diff(n->diff(t)).is_zero());
        CHECK(pi_N(*n, rho_N(*n, v)) == v);
        CHECK(sigma_N(*n, iota_N(*n, t)) == t);
        const auto u = rho_N(*n, v) + iota_N(*n, t);
        CHECK(iota_N(*n, sigma_N(*n, u)) + rho_N(*n, pi_N(*n, u)) == u);
        const TensorJElement dt = n->diff(t);
        if (t.is_zero() || dt.is_zero()) continue;
        const int w = n->bidegree(t.coords().begin()->first).wdeg;
        for (const auto& [k, c] : dt.coords()) {
          (void)c;
          CHECK(n->bidegree(k).wdeg == w);
        }
      }
    }
  }
}
