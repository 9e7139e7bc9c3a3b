#include "dglift/obstruction.hpp"

#include <map>

#include "dglift/error.hpp"

namespace dglift {

namespace {

TensorJElement unit_tensor(const AlgebraPtr& alg, const TensorKey& k) {
  TensorTerms t;
  t.add(k, alg->field().one());
  return TensorJElement(alg, std::move(t));
}

Bidegree equation_bidegree(const SemifreeModule& n, std::size_t kappa) {
  return n.basis()[kappa].bidegree() - Bidegree{1, 0};
}

// ψ_{D_Γ}(e_κ) - ψ_{D^B}(e_κ) = ∂γ_κ - Σ_{μ<κ} γ_μ b_μκ, for all κ.
std::vector<TensorJElement> linear_part(const SemifreeModule& n, const Connection& d) {
  const auto psi = psi_eval(n, d);
  const auto psi0 = psi_eval(n, Connection::canonical(n));
  std::vector<TensorJElement> out;
  for (std::size_t k = 0; k < n.rank(); ++k) out.push_back(psi[k] - psi0[k]);
  return out;
}

ObstructionReport trivial_report(const SemifreeModule& n, std::vector<TensorJElement> obstruction) {
  ObstructionReport r;
  r.decision = Decision::Liftable;
  r.method = Method::Trivial;
  r.obstruction = std::move(obstruction);
  r.witness = Connection::canonical(n);
  return r;
}

ObstructionReport rank2_report(const SemifreeModule& n, std::vector<TensorJElement> obstruction) {
  const AlgebraPtr& alg = n.algebra();
  ObstructionReport r;
  r.method = Method::Rank2Corollary;
  r.obstruction = std::move(obstruction);
  const AlgebraElement& b = n.structure(0, 1);
  if (b.is_zero()) {
    r.decision = Decision::Liftable;
    r.witness = Connection::canonical(n);
    return r;
  }
  // Is δ(b) a boundary in J?
  const Bidegree bb = *b.bidegree();
  const Bidegree src{bb.hdeg + 1, bb.wdeg};
  const BlockMatrix block = diagonal_boundary(alg, src);
  const auto src_keys = diagonal_basis(*alg, src);
  const auto dst_keys = diagonal_basis(*alg, bb);
  const DiagonalElement target = universal_delta(b);
  std::vector<Scalar> v;
  for (const auto& k : dst_keys) v.push_back(target.coords().coefficient(k, alg->field().zero()));

  const SolveResult res = linear_solve(block, v);
  if (const auto* sol = std::get_if<Solution>(&res)) {
    // γ_e' = e ⊗ (-1)^{|e|} c with ∂c = δ(b)
    const Scalar sign = n.basis()[0].hdeg % 2 ? -alg->field().one() : alg->field().one();
    EnvTerms c;
    for (std::size_t j = 0; j < src_keys.size(); ++j) c.add(src_keys[j], sign * sol->x[j]);
    Connection w = Connection::canonical(n);
    w.gamma[1] = TensorJElement::basis_tensor(0, DiagonalElement(alg, std::move(c)));
    r.decision = Decision::Liftable;
    r.witness = std::move(w);
    return r;
  }
  const auto& inc = std::get<Inconsistent>(res);
  Certificate cert;
  cert.method = Method::Rank2Corollary;
  cert.source_blocks = {src};
  cert.target_blocks = {bb};
  cert.columns = block.source;
  cert.rows = block.target;
  cert.rank = inc.rank;
  cert.augmented_rank = inc.augmented_rank;
  cert.pairing = inc.pairing;
  for (std::size_t i = 0; i < dst_keys.size(); ++i)
    if (!inc.left_null[i].is_zero())
      cert.functional.push_back(
          FunctionalEntry{1, TensorKey{0, dst_keys[i].left, dst_keys[i].right, dst_keys[i].r}, inc.left_null[i]});
  r.decision = Decision::NotLiftable;
  r.certificate = std::move(cert);
  return r;
}

ObstructionReport global_report(const SemifreeModule& n, std::vector<TensorJElement> obstruction) {
  const AlgebraPtr& alg = n.algebra();
  const std::size_t k = n.rank();
  const Scalar zero = alg->field().zero();

  // Unknowns: coordinates of γ_λ in (N⊗J)_{bideg e_λ}; equations: one block
  // (N⊗J)_{(|e_κ|-1, w_κ)} per κ.
  std::vector<std::pair<std::size_t, TensorKey>> unknowns, equations;
  std::map<std::pair<std::size_t, TensorKey>, std::size_t> row_of;
  BlockMatrix system{{}, {}, Matrix(alg->field(), 0, 0)};
  Certificate cert;
  for (std::size_t lambda = 0; lambda < k; ++lambda) {
    cert.source_blocks.push_back(n.basis()[lambda].bidegree());
    for (const auto& key : n.tensor_j_basis(n.basis()[lambda].bidegree())) {
      unknowns.emplace_back(lambda, key);
      system.source.push_back("γ[" + n.basis()[lambda].label + "] " + n.key_to_string(key));
    }
  }
  for (std::size_t kappa = 0; kappa < k; ++kappa) {
    cert.target_blocks.push_back(equation_bidegree(n, kappa));
    for (const auto& key : n.tensor_j_basis(equation_bidegree(n, kappa))) {
      row_of.emplace(std::pair{kappa, key}, equations.size());
      equations.emplace_back(kappa, key);
      system.target.push_back("[" + n.basis()[kappa].label + "] " + n.key_to_string(key));
    }
  }

  system.entries = Matrix(alg->field(), equations.size(), unknowns.size());
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    const auto& [lambda, key] = unknowns[j];
    const TensorJElement t = unit_tensor(alg, key);
    // ∂γ_λ enters equation λ; -γ_λ b_λκ enters each later equation κ.
    const TensorJElement dt = n.diff(t);
    for (const auto& [tk, c] : dt.coords()) system.entries(row_of.at({lambda, tk}), j) += c;
    for (std::size_t kappa = lambda + 1; kappa < k; ++kappa) {
      if (n.structure(lambda, kappa).is_zero()) continue;
      const TensorJElement tb = t * n.structure(lambda, kappa);
      for (const auto& [tk, c] : tb.coords()) system.entries(row_of.at({kappa, tk}), j) -= c;
    }
  }
  std::vector<Scalar> v(equations.size(), zero);
  for (std::size_t kappa = 0; kappa < k; ++kappa)
    for (const auto& [tk, c] : obstruction[kappa].coords()) v[row_of.at({kappa, tk})] += c;

  ObstructionReport r;
  r.method = Method::GlobalSolve;
  r.obstruction = std::move(obstruction);
  const SolveResult res = linear_solve(system, v);
  if (const auto* sol = std::get_if<Solution>(&res)) {
    Connection w = Connection::canonical(n);
    for (std::size_t j = 0; j < unknowns.size(); ++j)
      if (!sol->x[j].is_zero()) w.gamma[unknowns[j].first] += sol->x[j] * unit_tensor(alg, unknowns[j].second);
    r.decision = Decision::Liftable;
    r.witness = std::move(w);
    return r;
  }
  const auto& inc = std::get<Inconsistent>(res);
  cert.method = Method::GlobalSolve;
  cert.columns = std::move(system.source);
  cert.rows = std::move(system.target);
  cert.rank = inc.rank;
  cert.augmented_rank = inc.augmented_rank;
  cert.pairing = inc.pairing;
  for (std::size_t i = 0; i < equations.size(); ++i)
    if (!inc.left_null[i].is_zero())
      cert.functional.push_back(FunctionalEntry{equations[i].first, equations[i].second, inc.left_null[i]});
  r.decision = Decision::NotLiftable;
  r.certificate = std::move(cert);
  return r;
}

}  // namespace

std::vector<TensorJElement> delta_N(const SemifreeModule& n, DeltaMode mode) {
  std::vector<TensorJElement> out;
  for (std::size_t lambda = 0; lambda < n.rank(); ++lambda) {
    if (mode == DeltaMode::ViaSplitting) {
      out.push_back(sigma_N(n, n.diff(rho_N(n, n.basis_element(lambda)))));
      continue;
    }
    TensorJElement t(n.algebra());
    for (std::size_t mu = 0; mu < lambda; ++mu)
      if (!n.structure(mu, lambda).is_zero())
        t += TensorJElement::basis_tensor(mu, universal_delta(n.structure(mu, lambda)));
    out.push_back(std::move(t));
  }
  return out;
}

TensorJElement delta_N_apply(const SemifreeModule& n, const ModuleElement& v) {
  const auto d = delta_N(n);
  TensorJElement out(n.algebra());
  for (std::size_t lambda = 0; lambda < n.rank(); ++lambda) {
    const AlgebraElement b = v.component(lambda);
    if (!b.is_zero()) out += d[lambda] * b;
  }
  return out;
}

Connection Connection::canonical(const SemifreeModule& n) {
  return Connection{std::vector<TensorJElement>(n.rank(), TensorJElement(n.algebra()))};
}

bool has_basis_bidegrees(const SemifreeModule& n, const Connection& d) {
  if (d.gamma.size() != n.rank()) return false;
  for (std::size_t lambda = 0; lambda < n.rank(); ++lambda)
    for (const auto& [k, c] : d.gamma[lambda].coords())
      if (n.bidegree(k) != n.basis()[lambda].bidegree()) return false;
  return true;
}

TensorJElement connection_eval(const SemifreeModule& n, const Connection& d, const ModuleElement& v) {
  if (d.gamma.size() != n.rank()) throw Error(ErrorKind::DimensionMismatch, "connection has the wrong number of values");
  TensorJElement out(n.algebra());
  for (std::size_t lambda = 0; lambda < n.rank(); ++lambda) {
    const AlgebraElement b = v.component(lambda);
    if (b.is_zero()) continue;
    out += d.gamma[lambda] * b;
    out += TensorJElement::basis_tensor(lambda, universal_delta(b));
  }
  return out;
}

TensorJElement psi_apply(const SemifreeModule& n, const Connection& d, const ModuleElement& v) {
  return n.diff(connection_eval(n, d, v)) - connection_eval(n, d, n.diff(v));
}

std::vector<TensorJElement> psi_eval(const SemifreeModule& n, const Connection& d) {
  std::vector<TensorJElement> out;
  for (std::size_t lambda = 0; lambda < n.rank(); ++lambda) out.push_back(psi_apply(n, d, n.basis_element(lambda)));
  return out;
}

bool verify_witness(const SemifreeModule& n, const Connection& gamma) {
  if (!has_basis_bidegrees(n, gamma)) return false;
  for (std::size_t lambda = 0; lambda < n.rank(); ++lambda) {
    // ∂γ_λ - Σ_{μ<λ} (γ_μ b_μλ + e_μ ⊗ δ(b_μλ))
    TensorJElement rhs(n.algebra());
    for (std::size_t mu = 0; mu < lambda; ++mu) {
      const AlgebraElement& b = n.structure(mu, lambda);
      if (b.is_zero()) continue;
      rhs += gamma.gamma[mu] * b;
      rhs += TensorJElement::basis_tensor(mu, universal_delta(b));
    }
    if (!(n.diff(gamma.gamma[lambda]) - rhs).is_zero()) return false;
  }
  return true;
}

const char* to_string(Decision d) { return d == Decision::Liftable ? "LIFTABLE" : "NOT_LIFTABLE"; }

const char* to_string(Method m) {
  switch (m) {
    case Method::Trivial: return "trivial";
    case Method::Rank2Corollary: return "rank2-corollary";
    case Method::GlobalSolve: return "global-solve";
  }
  return "?";
}

std::optional<Method> parse_method(const std::string& s) {
  for (Method m : {Method::Trivial, Method::Rank2Corollary, Method::GlobalSolve})
    if (s == to_string(m)) return m;
  return std::nullopt;
}

ObstructionReport check_naive_lift(const SemifreeModule& n, std::optional<Method> force) {
  auto obstruction = delta_N(n);
  Method method = Method::GlobalSolve;
  if (n.has_zero_differential())
    method = Method::Trivial;
  else if (n.rank() == 2)
    method = Method::Rank2Corollary;
  if (force) {
    if (*force == Method::Trivial && !n.has_zero_differential())
      throw Error(ErrorKind::UsageError, "method 'trivial' needs a module with zero differential");
    if (*force == Method::Rank2Corollary && n.rank() != 2)
      throw Error(ErrorKind::UsageError, "method 'rank2-corollary' needs a module of rank 2");
    method = *force;
  }
  switch (method) {
    case Method::Trivial: return trivial_report(n, std::move(obstruction));
    case Method::Rank2Corollary: return rank2_report(n, std::move(obstruction));
    case Method::GlobalSolve: return global_report(n, std::move(obstruction));
  }
  return global_report(n, std::move(obstruction));
}

bool verify_certificate(const SemifreeModule& n, const Certificate& cert) {
  const AlgebraPtr& alg = n.algebra();
  const Scalar zero = alg->field().zero();
  for (const auto& e : cert.functional)
    if (e.equation >= n.rank()) return false;
  auto pair_with = [&](const std::vector<TensorJElement>& values) {
    Scalar s = zero;
    for (const auto& e : cert.functional) s += e.value * values[e.equation].coords().coefficient(e.key, zero);
    return s;
  };

  const Scalar pairing = pair_with(delta_N(n));
  if (pairing.is_zero() || !(pairing == cert.pairing)) return false;
  for (std::size_t lambda = 0; lambda < n.rank(); ++lambda)
    for (const auto& key : n.tensor_j_basis(n.basis()[lambda].bidegree())) {
      Connection d = Connection::canonical(n);
      d.gamma[lambda] = unit_tensor(alg, key);
      if (!pair_with(linear_part(n, d)).is_zero()) return false;
    }
  return true;
}

}  // namespace dglift
