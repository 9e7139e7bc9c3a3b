#include "dglift/sampling.hpp"

#include <map>

namespace dglift {

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Scalar Sampler::scalar(GroundField f, bool nonzero) {
  int v = uniform(-3, 3);
  while (nonzero && f.from_int(v).is_zero()) v = uniform(-3, 3);
  return f.from_int(v);
}

Bidegree Sampler::bidegree(Bidegree max) { return {uniform(0, max.hdeg), uniform(0, max.wdeg)}; }

namespace {

template <class Key>
LinearCombination<Key> random_combination(Sampler& s, GroundField f, const std::vector<Key>& basis) {
  LinearCombination<Key> t;
  for (const auto& k : basis)
    if (s.coin()) t.add(k, s.scalar(f));
  if (t.is_zero() && !basis.empty()) t.add(basis[s.uniform(0, static_cast<int>(basis.size()) - 1)], f.one());
  return t;
}

}  // namespace

AlgebraElement Sampler::element(const AlgebraPtr& alg, Bidegree b) {
  return AlgebraElement(alg, random_combination(*this, alg->field(), alg->basis(b)));
}

EnvelopeElement Sampler::envelope(const AlgebraPtr& alg, Bidegree b) {
  return EnvelopeElement(alg, random_combination(*this, alg->field(), envelope_basis(*alg, b)));
}

Bidegree Sampler::envelope_bidegree(const AlgebraPtr& alg, Bidegree max) {
  Bidegree b = bidegree(max);
  for (int tries = 0; tries < 20 && envelope_basis(*alg, b).size() < 3; ++tries) b = bidegree(max);
  return b;
}

DiagonalElement Sampler::diagonal(const AlgebraPtr& alg, Bidegree b) {
  return DiagonalElement(alg, random_combination(*this, alg->field(), diagonal_basis(*alg, b)));
}

Bidegree Sampler::algebra_bidegree(const AlgebraPtr& alg, Bidegree max) {
  Bidegree b = bidegree(max);
  for (int tries = 0; tries < 20 && alg->basis(b).size() < 2; ++tries) b = bidegree(max);
  return b;
}

Bidegree Sampler::diagonal_bidegree(const AlgebraPtr& alg, Bidegree max) {
  Bidegree b = bidegree(max);
  for (int tries = 0; tries < 20 && diagonal_basis(*alg, b).size() < 3; ++tries) b = bidegree(max);
  return b;
}

ModulePtr Sampler::module(const AlgebraPtr& alg, std::size_t max_rank, Bidegree max, std::size_t min_rank) {
  const std::size_t rank = static_cast<std::size_t>(uniform(static_cast<int>(min_rank), static_cast<int>(max_rank)));
  const GroundField f = alg->field();
  ModuleSpec spec;
  ModulePtr current = build_module(alg, spec);
  for (std::size_t lambda = 0; lambda < rank; ++lambda) {
    // Prefer a bidegree where the earlier part has nonzero cycles.
    Bidegree b = bidegree(max);
    std::vector<std::vector<Scalar>> cycles;
    std::vector<ModKey> keys;
    for (int tries = 0; tries < 24; ++tries) {
      b = bidegree(max);
      keys = current->element_basis({b.hdeg - 1, b.wdeg});
      if (keys.empty()) continue;
      const auto targets = current->element_basis({b.hdeg - 2, b.wdeg});
      std::map<ModKey, std::size_t> row_of;
      for (std::size_t i = 0; i < targets.size(); ++i) row_of.emplace(targets[i], i);
      Matrix d(f, targets.size(), keys.size());
      for (std::size_t j = 0; j < keys.size(); ++j) {
        ModTerms t;
        t.add(keys[j], f.one());
        const ModuleElement image = current->diff(ModuleElement(alg, std::move(t)));
        for (const auto& [k, c] : image.terms()) d(row_of.at(k), j) = c;
      }
      cycles = kernel_basis(d);
      if (!cycles.empty()) break;
    }
    ModTerms boundary;
    if (!cycles.empty() && coin(0.95))
      for (const auto& z : cycles) {
        const Scalar c = scalar(f);
        for (std::size_t j = 0; j < keys.size(); ++j) boundary.add(keys[j], c * z[j]);
      }
    const bool annotate = boundary.is_zero() || coin(0.3);
    spec.basis.push_back({"e" + std::to_string(lambda + 1), b.hdeg, annotate ? std::optional<int>(b.wdeg) : std::nullopt});
    if (boundary.is_zero()) spec.basis.back().wdeg = b.wdeg;
    spec.differentials.emplace_back(alg, std::move(boundary));
    current = build_module(alg, spec);
  }
  return current;
}

ModulePtr Sampler::free_module(const AlgebraPtr& alg, std::size_t rank, Bidegree max) {
  ModuleSpec spec;
  for (std::size_t i = 0; i < rank; ++i) {
    const Bidegree b = bidegree(max);
    spec.basis.push_back({"e" + std::to_string(i + 1), b.hdeg, b.wdeg});
    spec.differentials.emplace_back(alg);
  }
  return build_module(alg, spec);
}

ModuleElement Sampler::module_element(const SemifreeModule& n, Bidegree b) {
  return ModuleElement(n.algebra(), random_combination(*this, n.algebra()->field(), n.element_basis(b)));
}

TensorJElement Sampler::tensor_j(const SemifreeModule& n, Bidegree b) {
  return TensorJElement(n.algebra(), random_combination(*this, n.algebra()->field(), n.tensor_j_basis(b)));
}

Connection Sampler::connection(const SemifreeModule& n) {
  Connection c = Connection::canonical(n);
  for (std::size_t lambda = 0; lambda < n.rank(); ++lambda)
    if (coin(0.8)) c.gamma[lambda] = tensor_j(n, n.basis()[lambda].bidegree());
  return c;
}

Sampler::InductiveConnection Sampler::inductive_connection(const SemifreeModule& n) {
  InductiveConnection out{connection(n), n.rank()};
  const GroundField f = n.algebra()->field();
  for (std::size_t mu = 0; mu < n.rank(); ++mu) {
    TensorJElement target(n.algebra());
    for (std::size_t nu = 0; nu < mu; ++nu) {
      const AlgebraElement& b = n.structure(nu, mu);
      if (!b.is_zero()) target += out.gamma.gamma[nu] * b + TensorJElement::basis_tensor(nu, universal_delta(b));
    }
    const Bidegree deg = n.basis()[mu].bidegree();
    const BlockMatrix d = tensor_j_boundary(n, deg);
    const auto src = n.tensor_j_basis(deg);
    const auto dst = n.tensor_j_basis(deg - Bidegree{1, 0});
    std::vector<Scalar> v;
    for (const auto& k : dst) v.push_back(target.coords().coefficient(k, f.zero()));
    const SolveResult res = linear_solve(d, v);
    const auto* sol = std::get_if<Solution>(&res);
    if (!sol) {
      out.valid = mu;
      return out;
    }
    std::vector<Scalar> x = sol->x;
    for (const auto& z : kernel_basis(d.entries)) {
      const Scalar c = scalar(f);
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += c * z[j];
    }
    TensorTerms t;
    for (std::size_t j = 0; j < src.size(); ++j) t.add(src[j], x[j]);
    out.gamma.gamma[mu] = TensorJElement(n.algebra(), std::move(t));
  }
  return out;
}

}  // namespace dglift
