#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dglift/bidegree.hpp"
#include "dglift/coefficients.hpp"

namespace dglift {

/// Monomial X^ε · Y^(n) of a free extension: exponents in declaration order,
/// 0/1 for odd variables and a divided-power index for even ones.
/// Ordered by homological degree, then larger exponent vectors first.
struct Monomial {
  std::vector<std::uint32_t> exps;
  int hdeg = 0;

  bool is_one() const { return hdeg == 0; }
  friend std::weak_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

/// One basis vector m·r of B over the ground field.
struct AlgKey {
  Monomial m;
  RMono r;
  friend auto operator<=>(const AlgKey&, const AlgKey&) = default;
  friend bool operator==(const AlgKey&, const AlgKey&) = default;
};

using AlgTerms = LinearCombination<AlgKey>;

struct Variable {
  std::string name;
  int hdeg = 1;
  int wdeg = 1;
  bool odd() const { return hdeg % 2 != 0; }
};

struct VariableSpec {
  std::string name;
  int hdeg = 1;
  std::optional<int> wdeg;  // inferred from the differential when absent
  AlgTerms differential;    // terms over the full variable list
};

class AlgebraElement;

/// Strictly graded-commutative free extension B = R<X_1..X_n> with divided
/// powers on even variables and a Leibniz differential. Immutable.
class FreeDGAlgebra : public std::enable_shared_from_this<FreeDGAlgebra> {
 public:
  const RingPtr& ring() const { return ring_; }
  GroundField field() const { return ring_->field(); }
  const std::vector<Variable>& variables() const { return vars_; }
  std::size_t num_variables() const { return vars_.size(); }
  std::optional<std::size_t> find_variable(const std::string& name) const;
  /// Skeletons carry degrees only (zero differential, unchecked weights);
  /// they exist so presentations can be evaluated before validation.
  bool is_skeleton() const { return skeleton_; }

  Monomial unit() const;
  Monomial make_monomial(std::vector<std::uint32_t> exps) const;
  /// X_i, or the divided power X_i^(n) of an even variable.
  Monomial variable_power(std::size_t i, std::uint32_t n = 1) const;
  int weight(const Monomial& m) const;
  Bidegree bidegree(const AlgKey& k) const { return {k.m.hdeg, weight(k.m) + k.r.deg}; }

  struct MonomialProduct {
    Scalar coeff;
    Monomial m;
  };
  /// a·b with its Koszul sign and divided-power binomial; nullopt if zero.
  std::optional<MonomialProduct> multiply(const Monomial& a, const Monomial& b) const;
  AlgTerms multiply(const AlgTerms& a, const AlgTerms& b) const;
  /// d(m) by the Leibniz rule over the factors of m.
  AlgTerms differential(const Monomial& m) const;
  AlgTerms differential(const AlgTerms& a) const;

  /// Monomials of homological degree n (basis of B_n over R).
  std::vector<Monomial> monomial_basis(int n) const;
  /// Ground-field basis m·r of the (n, w) piece.
  std::vector<AlgKey> basis(Bidegree b) const;

  std::string monomial_to_string(const Monomial& m) const;
  std::string key_to_string(const AlgKey& k) const;
  std::string terms_to_string(const AlgTerms& t) const;

 private:
  friend std::shared_ptr<const FreeDGAlgebra> build_algebra(RingPtr ring, const std::vector<VariableSpec>& vars);
  friend std::shared_ptr<const FreeDGAlgebra> make_skeleton(RingPtr ring,
                                                            const std::vector<std::pair<std::string, int>>& vars);
  FreeDGAlgebra() = default;

  RingPtr ring_;
  std::vector<Variable> vars_;
  std::vector<AlgTerms> diffs_;
  bool skeleton_ = false;
};

using AlgebraPtr = std::shared_ptr<const FreeDGAlgebra>;

/// Validates the presentation.
/// Errors: DuplicateGenerator, InvalidDegree, ForwardReference,
/// GradingViolation, CycleViolation.
AlgebraPtr build_algebra(RingPtr ring, const std::vector<VariableSpec>& vars);

/// Degrees-only algebra used while parsing presentations.
AlgebraPtr make_skeleton(RingPtr ring, const std::vector<std::pair<std::string, int>>& vars);

class AlgebraElement {
 public:
  explicit AlgebraElement(AlgebraPtr alg) : alg_(std::move(alg)) {}
  AlgebraElement(AlgebraPtr alg, AlgTerms terms);

  static AlgebraElement one(AlgebraPtr alg);
  static AlgebraElement variable(AlgebraPtr alg, std::size_t i, std::uint32_t n = 1);
  static AlgebraElement from_ring(AlgebraPtr alg, const RingElement& r);
  static AlgebraElement from_key(AlgebraPtr alg, const AlgKey& k, const Scalar& c);

  const AlgebraPtr& algebra() const { return alg_; }
  const AlgTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  /// Common bidegree of all terms; nullopt for zero or inhomogeneous elements.
  std::optional<Bidegree> bidegree() const;
  std::map<Bidegree, AlgebraElement> components() const;
  /// Coefficient of a monomial as an element of R.
  RingElement coefficient(const Monomial& m) const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Scalar& s, AlgebraElement a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const { return alg_->terms_to_string(terms_); }

 private:
  void check_same_algebra(const AlgebraElement& other) const;

  AlgebraPtr alg_;
  AlgTerms terms_;
};

AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_diff(const AlgebraElement& a);

}  // namespace dglift
