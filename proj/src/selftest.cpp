#include "dglift/selftest.hpp"

#include <functional>

#include "dglift/dsl.hpp"
#include "dglift/error.hpp"
#include "dglift/sampling.hpp"

namespace dglift {

namespace {

constexpr const char* kAlgebras[] = {
    "ring R = QQ[x:1,y:1]/(x*y)\nalgebra B = R<X:1, Y:2 | dX = x, dY = X*y>\n",
    "ring R = QQ[x:1,y:1]/(x*y, x^2)\nalgebra B = R<X:1, Y:2 | dX = x, dY = X*y>\n",
    "ring R = FF(5)[x:1,y:1]/(x^2, y^2)\nalgebra B = R<X:1, Z:1, W:2 | dX = x, dZ = y, dW = x*Z - y*X>\n",
    "ring R = QQ\nalgebra B = R<X:1, Y:2:1, T:4 | dT = X*Y>\n",
};

class Runner {
 public:
  Runner(std::string name, const SelftestOptions& opt) : sampler(opt.seed ^ std::hash<std::string>{}(name)) {
    result.name = std::move(name);
    algebras = selftest_algebras();
  }

  void check(bool ok, const std::string& what) {
    ++result.checks;
    if (ok) return;
    if (result.failures++ == 0) result.first_failure = "case " + std::to_string(result.cases) + ": " + what;
  }

  template <class F>
  void run(std::size_t cases, F body) {
    for (std::size_t i = 0; i < cases; ++i) {
      const AlgebraPtr& alg = algebras[i % algebras.size()];
      try {
        body(alg);
      } catch (const std::exception& e) {
        check(false, std::string("exception: ") + e.what());
      }
      ++result.cases;
    }
  }

  Sampler sampler;
  std::vector<AlgebraPtr> algebras;
  SuiteResult result;
};

const Bidegree kEnvelopeMax{6, 6};
const Bidegree kFactorMax{3, 3};
const Bidegree kModuleMax{6, 6};

}  // namespace

std::vector<AlgebraPtr> selftest_algebras() {
  std::vector<AlgebraPtr> out;
  for (const char* text : kAlgebras) out.push_back(parse_problem(text).algebras.front().algebra);
  return out;
}

SuiteResult splitting_suite(const SelftestOptions& opt) {
  Runner r("splitting", opt);
  r.run(opt.cases, [&](const AlgebraPtr& alg) {
    const EnvelopeElement u = r.sampler.envelope(alg, r.sampler.envelope_bidegree(alg, kEnvelopeMax));
    const AlgebraElement b = r.sampler.element(alg, r.sampler.algebra_bidegree(alg, kEnvelopeMax));
    const DiagonalElement j = r.sampler.diagonal(alg, r.sampler.diagonal_bidegree(alg, kEnvelopeMax));
    r.check(pi(rho(b)) == b, "πρ(b) != b");
    r.check(sigma(j.to_envelope()) == j, "σι(j) != j");
    r.check(sigma(u).to_envelope() + rho(pi(u)) == u, "ισ(u) + ρπ(u) != u");
    r.check(sigma(env_diff(u)) == diagonal_diff(sigma(u)), "σd(u) != ∂σ(u)");
    r.check(env_diff(rho(b)) == rho(alg_diff(b)), "dρ(b) != ρd(b)");
    r.check(pi(env_diff(u)) == alg_diff(pi(u)), "dπ(u) != πd(u)");
    r.check(env_diff(env_diff(u)).is_zero(), "d²(u) != 0");
    r.check(pi(j.to_envelope()).is_zero(), "π(j) != 0");
  });
  return r.result;
}

SuiteResult derivation_suite(const SelftestOptions& opt) {
  Runner r("derivation", opt);
  r.run(opt.cases, [&](const AlgebraPtr& alg) {
    const AlgebraElement b1 = r.sampler.element(alg, r.sampler.algebra_bidegree(alg, kFactorMax));
    const AlgebraElement b2 = r.sampler.element(alg, r.sampler.algebra_bidegree(alg, kFactorMax));
    const AlgebraElement one = AlgebraElement::one(alg);
    const int n1 = b1.bidegree() ? b1.bidegree()->hdeg : 0;
    const int n2 = b2.bidegree() ? b2.bidegree()->hdeg : 0;
    EnvelopeElement rhs = env_mul(universal_delta(b1).to_envelope(), EnvelopeElement::tensor(one, b2));
    const EnvelopeElement second = env_mul(universal_delta(b2).to_envelope(), EnvelopeElement::tensor(b1, one));
    rhs += (n1 * n2) % 2 ? -second : second;
    r.check(universal_delta(b1 * b2).to_envelope() == rhs, "δ(b1 b2) violates the derivation rule");
    r.check(universal_delta(alg_diff(b1)) == diagonal_diff(universal_delta(b1)), "δd(b) != ∂δ(b)");
    if (!alg->ring()->is_field())
      r.check(universal_delta(AlgebraElement::from_ring(alg, RingElement::generator(alg->ring(), 0))).is_zero(),
              "δ(r) != 0");
  });
  return r.result;
}

SuiteResult obstruction_suite(const SelftestOptions& opt) {
  Runner r("obstruction", opt);
  r.run(opt.cases, [&](const AlgebraPtr& alg) {
    const ModulePtr n = r.sampler.module(alg, 4, kModuleMax);
    const auto via_split = delta_N(*n, DeltaMode::ViaSplitting);
    const auto via_formula = delta_N(*n, DeltaMode::ViaFormula);
    r.check(via_split == via_formula, "Δ_N via splitting != via formula");
    const auto psi = psi_eval(*n, Connection::canonical(*n));
    for (std::size_t l = 0; l < n->rank(); ++l) r.check(psi[l] == -via_formula[l], "ψ_{D^B} != -Δ_N");

    const ModuleElement x = r.sampler.module_element(*n, r.sampler.bidegree(kModuleMax + Bidegree{2, 2}));
    r.check(n->diff(n->diff(x)).is_zero(), "∂²x != 0");
    r.check((n->diff(delta_N_apply(*n, x)) + delta_N_apply(*n, n->diff(x))).is_zero(), "∂Δ_N + Δ_N∂ != 0");
    const TensorJElement t = r.sampler.tensor_j(*n, r.sampler.bidegree(kModuleMax + Bidegree{2, 2}));
    r.check(n->diff(n->diff(t)).is_zero(), "∂² != 0 on N⊗J");

    // ∂ Σ_{μ<λ} (γ_μ b_μλ + e_μ⊗δ(b_μλ)) = 0 whenever γ_μ satisfies the
    // criterion for every μ < λ; checked up to and including the first λ
    // where the criterion cannot be met.
    const auto g = r.sampler.inductive_connection(*n);
    for (std::size_t l = 0; l < n->rank() && l <= g.valid; ++l) {
      TensorJElement s(alg);
      for (std::size_t mu = 0; mu < l; ++mu) {
        const AlgebraElement& b = n->structure(mu, l);
        s += g.gamma.gamma[mu] * b + TensorJElement::basis_tensor(mu, universal_delta(b));
      }
      r.check(n->diff(s).is_zero(), "partial sum for " + n->basis()[l].label + " is not a cycle");
    }
  });
  return r.result;
}

SuiteResult homotopy_suite(const SelftestOptions& opt) {
  Runner r("homotopy", opt);
  r.run(opt.cases, [&](const AlgebraPtr& alg) {
    const ModulePtr n = r.sampler.module(alg, 4, kModuleMax);
    const Connection d1 = r.sampler.connection(*n);
    const Connection d2 = r.sampler.connection(*n);
    auto h = [&](const ModuleElement& v) { return connection_eval(*n, d2, v) - connection_eval(*n, d1, v); };

    std::vector<ModuleElement> probes;
    for (std::size_t l = 0; l < n->rank(); ++l) probes.push_back(n->basis_element(l));
    probes.push_back(r.sampler.module_element(*n, r.sampler.bidegree(kModuleMax + Bidegree{2, 2})));
    for (const auto& v : probes) {
      const TensorJElement lhs = psi_apply(*n, d1, v) - psi_apply(*n, d2, v);
      r.check(lhs == -n->diff(h(v)) + h(n->diff(v)), "ψ1 - ψ2 != ∂^Σ h + h∂");
    }
    // D(nb) = D(n)b + n⊗δ(b), and D1 - D2 is B-linear
    const ModuleElement v = probes.back();
    const AlgebraElement b = r.sampler.element(alg, r.sampler.algebra_bidegree(alg, kFactorMax));
    r.check(connection_eval(*n, d1, v * b) == connection_eval(*n, d1, v) * b + tensor_delta(*n, v, b),
            "connection law fails");
    r.check(h(v * b) == h(v) * b, "difference of connections is not B-linear");
    // Γ is recovered from the connection's values on the basis.
    for (std::size_t l = 0; l < n->rank(); ++l)
      r.check(connection_eval(*n, d1, n->basis_element(l)) == d1.gamma[l], "D_Γ(e_λ) != γ_λ");
  });
  return r.result;
}

SuiteResult trivial_suite(const SelftestOptions& opt) {
  Runner r("trivial", opt);
  r.run(opt.cases, [&](const AlgebraPtr& alg) {
    const std::size_t rank = static_cast<std::size_t>(r.sampler.uniform(1, 5));
    const ModulePtr n = r.sampler.free_module(alg, rank, kModuleMax);
    const ObstructionReport rep = check_naive_lift(*n);
    r.check(rep.decision == Decision::Liftable, "zero differential module not liftable");
    r.check(rep.method == Method::Trivial, "zero differential module not decided by the trivial method");
    bool zero = true;
    for (const auto& t : rep.obstruction) zero = zero && t.is_zero();
    r.check(zero, "nonzero obstruction for zero differential");
    r.check(rep.witness && verify_witness(*n, *rep.witness), "trivial witness does not verify");

    ModuleSpec one;
    one.basis = {{"e", 0, 0}};
    one.differentials = {ModuleElement(alg)};
    const ModulePtr b = build_module(alg, one);
    r.check(check_naive_lift(*b).decision == Decision::Liftable, "rank-1 free module not liftable");
  });
  return r.result;
}

SuiteResult decision_suite(const SelftestOptions& opt) {
  Runner r("decision", opt);
  r.run(opt.cases, [&](const AlgebraPtr& alg) {
    const ModulePtr n = r.sampler.module(alg, 2, kModuleMax, 2);
    const ObstructionReport a = check_naive_lift(*n, Method::Rank2Corollary);
    const ObstructionReport b = check_naive_lift(*n, Method::GlobalSolve);
    r.check(a.decision == b.decision, "rank-2 test and global solve disagree");
    for (const auto* rep : {&a, &b}) {
      if (rep->decision == Decision::Liftable)
        r.check(rep->witness && verify_witness(*n, *rep->witness), "witness does not verify");
      else
        r.check(rep->certificate && verify_certificate(*n, *rep->certificate), "certificate does not verify");
    }
  });
  return r.result;
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& opt) {
  SelftestOptions half = opt;
  half.cases = (opt.cases + 1) / 2;
  return {splitting_suite(opt), derivation_suite(opt), obstruction_suite(opt),
          homotopy_suite(half), trivial_suite(opt), decision_suite(opt)};
}

}  // namespace dglift
