#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dglift/envelope.hpp"

namespace dglift {

/// e_label · m · r
struct ModKey {
  std::size_t label = 0;
  Monomial m;
  RMono r;
  friend auto operator<=>(const ModKey&, const ModKey&) = default;
  friend bool operator==(const ModKey&, const ModKey&) = default;
};

/// e_label ⊗ (left^o ⊗ right · r)
struct TensorKey {
  std::size_t label = 0;
  Monomial left;
  Monomial right;
  RMono r;
  EnvKey env() const { return EnvKey{left, right, r}; }
  friend auto operator<=>(const TensorKey&, const TensorKey&) = default;
  friend bool operator==(const TensorKey&, const TensorKey&) = default;
};

using ModTerms = LinearCombination<ModKey>;
using TensorTerms = LinearCombination<TensorKey>;

/// Element Σ e_λ b_λ of a semifree module, written over its basis labels.
class ModuleElement {
 public:
  explicit ModuleElement(AlgebraPtr alg) : alg_(std::move(alg)) {}
  ModuleElement(AlgebraPtr alg, ModTerms terms) : alg_(std::move(alg)), terms_(std::move(terms)) {}
  /// e_label · b
  static ModuleElement basis_times(std::size_t label, const AlgebraElement& b);

  const AlgebraPtr& algebra() const { return alg_; }
  const ModTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  /// The B-coefficient b_label.
  AlgebraElement component(std::size_t label) const;

  ModuleElement operator-() const;
  ModuleElement& operator+=(const ModuleElement& other);
  ModuleElement& operator-=(const ModuleElement& other);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  /// Right action n·b.
  friend ModuleElement operator*(const ModuleElement& n, const AlgebraElement& b);
  friend ModuleElement operator*(const Scalar& s, ModuleElement a);
  friend bool operator==(const ModuleElement& a, const ModuleElement& b) { return a.terms_ == b.terms_; }

 private:
  AlgebraPtr alg_;
  ModTerms terms_;
};

/// Element Σ e_λ ⊗ j_λ of N ⊗_B J, with each j_λ in σ-coordinates.
class TensorJElement {
 public:
  explicit TensorJElement(AlgebraPtr alg) : alg_(std::move(alg)) {}
  /// Throws std::invalid_argument if a key has a unit left factor.
  TensorJElement(AlgebraPtr alg, TensorTerms coords);
  /// e_label ⊗ j
  static TensorJElement basis_tensor(std::size_t label, const DiagonalElement& j);

  const AlgebraPtr& algebra() const { return alg_; }
  const TensorTerms& coords() const { return coords_; }
  bool is_zero() const { return coords_.is_zero(); }
  DiagonalElement component(std::size_t label) const;

  TensorJElement operator-() const;
  TensorJElement& operator+=(const TensorJElement& other);
  TensorJElement& operator-=(const TensorJElement& other);
  friend TensorJElement operator+(TensorJElement a, const TensorJElement& b) { return a += b; }
  friend TensorJElement operator-(TensorJElement a, const TensorJElement& b) { return a -= b; }
  /// Right action (e ⊗ j)·b = e ⊗ (j·b).
  friend TensorJElement operator*(const TensorJElement& t, const AlgebraElement& b);
  friend TensorJElement operator*(const Scalar& s, TensorJElement a);
  friend bool operator==(const TensorJElement& a, const TensorJElement& b) { return a.coords_ == b.coords_; }

 private:
  AlgebraPtr alg_;
  TensorTerms coords_;
};

/// Element of N ⊗_B B^e in raw pair form. Only used transiently by the
/// graded splittings.
class TensorEnvElement {
 public:
  explicit TensorEnvElement(AlgebraPtr alg) : alg_(std::move(alg)) {}
  TensorEnvElement(AlgebraPtr alg, TensorTerms terms) : alg_(std::move(alg)), terms_(std::move(terms)) {}

  const AlgebraPtr& algebra() const { return alg_; }
  const TensorTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }

  TensorEnvElement& operator+=(const TensorEnvElement& other);
  TensorEnvElement& operator-=(const TensorEnvElement& other);
  friend TensorEnvElement operator+(TensorEnvElement a, const TensorEnvElement& b) { return a += b; }
  friend TensorEnvElement operator-(TensorEnvElement a, const TensorEnvElement& b) { return a -= b; }
  friend bool operator==(const TensorEnvElement& a, const TensorEnvElement& b) { return a.terms_ == b.terms_; }

 private:
  AlgebraPtr alg_;
  TensorTerms terms_;
};

struct BasisSpec {
  std::string label;
  int hdeg = 0;
  std::optional<int> wdeg;  // inferred from ∂ when absent, else 0
};

struct ModuleSpec {
  std::vector<BasisSpec> basis;
  std::vector<ModuleElement> differentials;  // ∂e_λ, one per basis element
};

struct BasisElement {
  std::string label;
  int hdeg = 0;
  int wdeg = 0;
  Bidegree bidegree() const { return {hdeg, wdeg}; }
};

/// Finitely generated semifree DG B-module with ordered basis e_1 < ... < e_k
/// and ∂(e_λ) = Σ_{μ<λ} e_μ b_{μλ}. Immutable.
class SemifreeModule {
 public:
  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  std::optional<std::size_t> find_label(const std::string& label) const;
  /// b_{μλ}
  const AlgebraElement& structure(std::size_t mu, std::size_t lambda) const { return matrix_[mu][lambda]; }
  bool has_zero_differential() const;

  Bidegree bidegree(const ModKey& k) const;
  Bidegree bidegree(const TensorKey& k) const;

  ModuleElement basis_element(std::size_t label) const;
  /// ∂(e_λ)
  ModuleElement boundary_of_basis(std::size_t label) const;

  ModuleElement diff(const ModuleElement& v) const;
  TensorJElement diff(const TensorJElement& t) const;
  TensorEnvElement diff(const TensorEnvElement& t) const;

  std::vector<ModKey> element_basis(Bidegree b) const;
  std::vector<TensorKey> tensor_j_basis(Bidegree b) const;

  /// DSL syntax, e.g. "e*X*Y*y".
  std::string to_string(const ModuleElement& v) const;
  /// e.g. "e⊗σ((Y^(2))^o⊗1)".
  std::string to_string(const TensorJElement& t) const;
  /// Raw pair form, e.g. "e⊗(X*Y)^o⊗1·y - e⊗1^o⊗(X*Y)·y".
  std::string to_string(const TensorEnvElement& t) const;
  std::string key_to_string(const TensorKey& k) const;

 private:
  friend std::shared_ptr<const SemifreeModule> build_module(AlgebraPtr alg, const ModuleSpec& spec,
                                                            bool check_square);
  SemifreeModule() = default;

  AlgebraPtr alg_;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<AlgebraElement>> matrix_;
};

using ModulePtr = std::shared_ptr<const SemifreeModule>;

/// Validates triangularity, bidegrees and ∂² = 0 (componentwise:
/// Σ_{ν<μ<λ} b_νμ b_μλ + (-1)^{|e_ν|} d b_νλ = 0).
/// Errors: DuplicateGenerator, TriangularityViolation, DegreeMismatch,
/// DifferentialSquareNonzero. With check_square = false only the ∂² test is
/// skipped.
ModulePtr build_module(AlgebraPtr alg, const ModuleSpec& spec, bool check_square = true);

// Graded splittings of 0 -> N⊗J -> N⊗B^e -> N -> 0. They are right B-linear
// but not chain maps.
TensorEnvElement rho_N(const SemifreeModule& n, const ModuleElement& v);
TensorJElement sigma_N(const SemifreeModule& n, const TensorEnvElement& t);
ModuleElement pi_N(const SemifreeModule& n, const TensorEnvElement& t);
TensorEnvElement iota_N(const SemifreeModule& n, const TensorJElement& t);

/// Matrix of ∂ from (N⊗J)_source to (N⊗J)_{source - (1,0)} in the bases of
/// tensor_j_basis.
BlockMatrix tensor_j_boundary(const SemifreeModule& n, Bidegree source);

/// n ⊗ δ(b) for a module element n = Σ e_λ c_λ: Σ e_λ ⊗ c_λ·δ(b).
TensorJElement tensor_delta(const SemifreeModule& n, const ModuleElement& v, const AlgebraElement& b);

}  // namespace dglift
