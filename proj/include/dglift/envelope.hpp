#pragma once

#include <vector>

#include "dglift/exact_linalg.hpp"
#include "dglift/free_dga.hpp"

namespace dglift {

/// Basis vector left^o ⊗ right · r of the enveloping algebra over the ground field.
struct EnvKey {
  Monomial left;
  Monomial right;
  RMono r;
  friend auto operator<=>(const EnvKey&, const EnvKey&) = default;
  friend bool operator==(const EnvKey&, const EnvKey&) = default;
};

using EnvTerms = LinearCombination<EnvKey>;

Bidegree bidegree_of(const FreeDGAlgebra& alg, const EnvKey& k);

/// Element of B^e = B^o ⊗_R B, stored by monomial pairs.
class EnvelopeElement {
 public:
  explicit EnvelopeElement(AlgebraPtr alg) : alg_(std::move(alg)) {}
  EnvelopeElement(AlgebraPtr alg, EnvTerms terms) : alg_(std::move(alg)), terms_(std::move(terms)) {}
  /// b1^o ⊗ b2
  static EnvelopeElement tensor(const AlgebraElement& b1, const AlgebraElement& b2);

  const AlgebraPtr& algebra() const { return alg_; }
  const EnvTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  std::optional<Bidegree> bidegree() const;

  EnvelopeElement operator-() const;
  EnvelopeElement& operator+=(const EnvelopeElement& other);
  EnvelopeElement& operator-=(const EnvelopeElement& other);
  friend EnvelopeElement operator+(EnvelopeElement a, const EnvelopeElement& b) { return a += b; }
  friend EnvelopeElement operator-(EnvelopeElement a, const EnvelopeElement& b) { return a -= b; }
  friend EnvelopeElement operator*(const Scalar& s, EnvelopeElement a);
  friend bool operator==(const EnvelopeElement& a, const EnvelopeElement& b) { return a.terms_ == b.terms_; }

  /// Sum of "m1^o⊗m2·r" terms.
  std::string to_string() const;

 private:
  AlgebraPtr alg_;
  EnvTerms terms_;
};

/// Element of the diagonal ideal J = ker π in σ-coordinates: the coefficient
/// of key (m1, m2, r), m1 != 1, multiplies σ(m1^o⊗m2)·r = (m1^o⊗m2 - 1^o⊗m1m2)·r.
class DiagonalElement {
 public:
  explicit DiagonalElement(AlgebraPtr alg) : alg_(std::move(alg)) {}
  /// Throws std::invalid_argument if some key has left == 1.
  DiagonalElement(AlgebraPtr alg, EnvTerms sigma_coords);
  /// Throws std::invalid_argument unless π(u) = 0.
  static DiagonalElement from_envelope(const EnvelopeElement& u);

  const AlgebraPtr& algebra() const { return alg_; }
  const EnvTerms& coords() const { return coords_; }
  bool is_zero() const { return coords_.is_zero(); }
  std::optional<Bidegree> bidegree() const;
  EnvelopeElement to_envelope() const;

  DiagonalElement operator-() const;
  DiagonalElement& operator+=(const DiagonalElement& other);
  DiagonalElement& operator-=(const DiagonalElement& other);
  friend DiagonalElement operator+(DiagonalElement a, const DiagonalElement& b) { return a += b; }
  friend DiagonalElement operator-(DiagonalElement a, const DiagonalElement& b) { return a -= b; }
  friend DiagonalElement operator*(const Scalar& s, DiagonalElement a);
  friend bool operator==(const DiagonalElement& a, const DiagonalElement& b) { return a.coords_ == b.coords_; }

  /// Sum of "σ(m1^o⊗m2)·r" terms.
  std::string to_string() const;

 private:
  AlgebraPtr alg_;
  EnvTerms coords_;
};

// Term-level kernels shared with the module layer.
namespace env {
EnvTerms mul(const FreeDGAlgebra& alg, const EnvTerms& a, const EnvTerms& b);
EnvTerms diff(const FreeDGAlgebra& alg, const EnvTerms& a);
/// b·(m1^o⊗m2) = (b m1)^o⊗m2
EnvTerms left_act(const FreeDGAlgebra& alg, const AlgTerms& b, const EnvTerms& u);
/// (m1^o⊗m2)·b = m1^o⊗m2 b
EnvTerms right_act(const FreeDGAlgebra& alg, const EnvTerms& u, const AlgTerms& b);
AlgTerms pi(const FreeDGAlgebra& alg, const EnvTerms& u);
/// 1^o⊗b
EnvTerms rho(const FreeDGAlgebra& alg, const AlgTerms& b);
/// σ-coordinates of σ(u): the raw terms with left factor != 1.
EnvTerms sigma(const EnvTerms& u);
/// Raw pair form of σ-coordinates.
EnvTerms unsigma(const FreeDGAlgebra& alg, const EnvTerms& coords);
/// σ-coordinates of δ(b) = b^o⊗1 - 1^o⊗b.
EnvTerms delta(const FreeDGAlgebra& alg, const AlgTerms& b);
std::string key_to_string(const FreeDGAlgebra& alg, const EnvKey& k, bool sigma_form);
}  // namespace env

EnvelopeElement env_mul(const EnvelopeElement& u, const EnvelopeElement& v);
EnvelopeElement env_diff(const EnvelopeElement& u);

AlgebraElement pi(const EnvelopeElement& u);
EnvelopeElement rho(const AlgebraElement& b);
DiagonalElement sigma(const EnvelopeElement& u);
/// ∂^J, induced from the differential of B^e.
DiagonalElement diagonal_diff(const DiagonalElement& j);

/// The universal derivation δ(b) = b^o⊗1 - 1^o⊗b.
DiagonalElement universal_delta(const AlgebraElement& b);

enum class Side { Left, Right };
EnvelopeElement bimodule_act(Side side, const AlgebraElement& b, const EnvelopeElement& u);
DiagonalElement bimodule_act(Side side, const AlgebraElement& b, const DiagonalElement& j);

/// Ground-field basis of B^e in the given bidegree.
std::vector<EnvKey> envelope_basis(const FreeDGAlgebra& alg, Bidegree b);
/// Ground-field basis {σ(m1^o⊗m2)·r : m1 != 1} of J in the given bidegree.
std::vector<EnvKey> diagonal_basis(const FreeDGAlgebra& alg, Bidegree b);

/// Matrix of ∂^J from J_(n,w) to J_(n-1,w) in the diagonal bases.
BlockMatrix diagonal_boundary(const AlgebraPtr& alg, Bidegree source);

struct DiagonalHomology {
  Bidegree bidegree;
  std::size_t dimension = 0;       // dim J_(n,w)
  std::size_t cycles = 0;          // dim ker ∂ on J_(n,w)
  std::size_t boundaries = 0;      // rank of ∂ from J_(n+1,w)
  std::size_t homology = 0;        // cycles - boundaries
};

DiagonalHomology diagonal_homology(const AlgebraPtr& alg, Bidegree b);

}  // namespace dglift
