#pragma once

#include <cstdint>
#include <random>

#include "dglift/obstruction.hpp"

namespace dglift {

/// Seeded generator of random test objects. Same seed, same objects.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);  // inclusive
  bool coin(double p = 0.5);
  /// Small integer in [-3, 3], optionally nonzero.
  Scalar scalar(GroundField f, bool nonzero = false);

  /// A bidegree in [0, max.hdeg] x [0, max.wdeg].
  Bidegree bidegree(Bidegree max);

  AlgebraElement element(const AlgebraPtr& alg, Bidegree b);
  EnvelopeElement envelope(const AlgebraPtr& alg, Bidegree b);
  DiagonalElement diagonal(const AlgebraPtr& alg, Bidegree b);
  /// A random bidegree up to max whose piece of B, B^e or J has a few basis
  /// vectors, if one is found quickly.
  Bidegree algebra_bidegree(const AlgebraPtr& alg, Bidegree max);
  Bidegree envelope_bidegree(const AlgebraPtr& alg, Bidegree max);
  Bidegree diagonal_bidegree(const AlgebraPtr& alg, Bidegree max);

  /// Random semifree module of rank min_rank..max_rank with basis bidegrees
  /// up to max: each ∂e_λ is a random cycle of the submodule spanned by
  /// e_1..e_{λ-1}.
  ModulePtr module(const AlgebraPtr& alg, std::size_t max_rank, Bidegree max, std::size_t min_rank = 1);
  /// Zero-differential module of the given rank.
  ModulePtr free_module(const AlgebraPtr& alg, std::size_t rank, Bidegree max);

  ModuleElement module_element(const SemifreeModule& n, Bidegree b);
  TensorJElement tensor_j(const SemifreeModule& n, Bidegree b);
  /// Random Γ with γ_λ of the bidegree of e_λ.
  Connection connection(const SemifreeModule& n);

  /// Random Γ built in basis order so that ∂γ_μ = Σ_{ν<μ}(γ_ν b_νμ + e_ν⊗δ(b_νμ))
  /// holds for every μ < valid, where valid is the first index at which the
  /// equation has no solution (or the rank). γ_μ for μ >= valid is random.
  struct InductiveConnection {
    Connection gamma;
    std::size_t valid = 0;
  };
  InductiveConnection inductive_connection(const SemifreeModule& n);

 private:
  std::mt19937_64 rng_;
};

}  // namespace dglift
