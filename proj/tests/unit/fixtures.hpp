#pragma once

// Programmatic constructions of the standard examples, independent of the DSL.

#include <vector>

#include "dglift/error.hpp"
#include "dglift/obstruction.hpp"

namespace fixtures {

using namespace dglift;

inline RingPtr qxy(bool kill_x_squared = false) {
  RingSpec s;
  s.generators = {{"x", 1}, {"y", 1}};
  s.relations = {{1, 1}};
  if (kill_x_squared) s.relations.push_back({2, 0});
  return build_base_ring(s);
}

inline RingPtr free_qxy() {
  RingSpec s;
  s.generators = {{"x", 1}, {"y", 1}};
  return build_base_ring(s);
}

/// Monomial over a variable list that is not built yet.
inline Monomial mono(std::vector<std::uint32_t> exps, int hdeg) { return Monomial{std::move(exps), hdeg}; }

/// B = R<X:1, Y:2 | dX = x, dY = X*y>
inline AlgebraPtr example_algebra(const RingPtr& r) {
  VariableSpec x{"X", 1, std::nullopt, {}};
  x.differential.add(AlgKey{mono({0, 0}, 0), r->generator(0)}, r->field().one());
  VariableSpec y{"Y", 2, std::nullopt, {}};
  y.differential.add(AlgKey{mono({1, 0}, 1), r->generator(1)}, r->field().one());
  return build_algebra(r, {x, y});
}

struct Names {
  AlgebraPtr alg;
  AlgebraElement one, X, Y, x, y;
  explicit Names(AlgebraPtr a)
      : alg(a),
        one(AlgebraElement::one(a)),
        X(AlgebraElement::variable(a, 0)),
        Y(AlgebraElement::variable(a, 1)),
        x(AlgebraElement::from_ring(a, RingElement::generator(a->ring(), 0))),
        y(AlgebraElement::from_ring(a, RingElement::generator(a->ring(), 1))) {}
  AlgebraElement Yn(std::uint32_t n) const { return AlgebraElement::variable(alg, 1, n); }
  Scalar s(long v) const { return alg->field().from_int(v); }
};

/// Rank-2 module <e:0, e':|b|+1 | de' = e*b>.
inline ModulePtr cone(const AlgebraPtr& alg, const AlgebraElement& b, int e_deg = 0,
                      const std::string& e = "e", const std::string& ep = "ep") {
  ModuleSpec spec;
  spec.basis = {{e, e_deg, std::nullopt}, {ep, e_deg + b.bidegree()->hdeg + 1, std::nullopt}};
  spec.differentials = {ModuleElement(alg), ModuleElement::basis_times(0, b)};
  return build_module(alg, spec);
}

/// The σ-coordinate basis element σ(m1^o⊗m2)·r.
inline DiagonalElement sigma_basis(const AlgebraElement& m1, const AlgebraElement& m2) {
  return sigma(EnvelopeElement::tensor(m1, m2));
}

}  // namespace fixtures
