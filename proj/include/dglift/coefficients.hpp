#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dglift/field.hpp"
#include "dglift/linear_combination.hpp"

namespace dglift {

/// Monomial of the base ring: an exponent vector with its cached internal degree.
/// Ordered by degree, then lexicographically with larger exponents of earlier
/// generators first (x^3 before y^3).
struct RMono {
  std::vector<std::uint32_t> exps;
  int deg = 0;

  bool is_one() const { return deg == 0; }
  friend std::weak_ordering operator<=>(const RMono& a, const RMono& b);
  friend bool operator==(const RMono& a, const RMono& b) { return a.exps == b.exps; }
};

struct RingGenerator {
  std::string name;
  int degree = 1;
};

struct RingSpec {
  GroundField field = GroundField::rationals();
  std::vector<RingGenerator> generators;
  std::vector<std::vector<std::uint32_t>> relations;  // exponent vectors
};

/// A ground field, or a graded quotient k[x_1..x_m]/(monomials). Immutable.
class BaseRing {
 public:
  GroundField field() const { return field_; }
  std::size_t num_generators() const { return generators_.size(); }
  const std::vector<RingGenerator>& generators() const { return generators_; }
  const std::vector<RMono>& relations() const { return relations_; }
  bool is_field() const { return generators_.empty(); }

  RMono unit() const;
  RMono generator(std::size_t i) const;
  RMono make_monomial(std::vector<std::uint32_t> exps) const;
  std::optional<std::size_t> find_generator(const std::string& name) const;

  /// False if the monomial is divisible by some relation.
  bool is_standard(const RMono& m) const;
  /// Product of two standard monomials, or nullopt when it lies in the ideal.
  std::optional<RMono> multiply(const RMono& a, const RMono& b) const;
  /// Standard monomials of internal degree w, in RMono order.
  std::vector<RMono> basis(int w) const;

  LinearCombination<RMono> normal_form(const LinearCombination<RMono>& raw) const;

  std::string monomial_to_string(const RMono& m) const;
  /// The ring in description syntax, e.g. "QQ[x:1,y:1]/(x*y)".
  std::string description() const;

 private:
  friend std::shared_ptr<const BaseRing> build_base_ring(const RingSpec& spec);
  BaseRing() = default;

  GroundField field_ = GroundField::rationals();
  std::vector<RingGenerator> generators_;
  std::vector<RMono> relations_;
};

using RingPtr = std::shared_ptr<const BaseRing>;

/// Validates and minimises the relation list.
/// Errors: DuplicateGenerator, InvalidDegree, NonMonomialRelation.
RingPtr build_base_ring(const RingSpec& spec);

/// Element of a BaseRing in normal form.
class RingElement {
 public:
  explicit RingElement(RingPtr ring) : ring_(std::move(ring)) {}
  RingElement(RingPtr ring, const RMono& m, const Scalar& c);

  static RingElement constant(RingPtr ring, long c);
  static RingElement generator(RingPtr ring, std::size_t i);

  const RingPtr& ring() const { return ring_; }
  const LinearCombination<RMono>& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  /// Degree of every term, or nullopt for zero / inhomogeneous elements.
  std::optional<int> degree() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const Scalar& s, RingElement a);
  friend bool operator==(const RingElement& a, const RingElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void check_same_ring(const RingElement& other) const;

  RingPtr ring_;
  LinearCombination<RMono> terms_;
};

enum class RingOp { Add, Mul };
RingElement ring_arith(const RingElement& a, const RingElement& b, RingOp op);

/// Exact check that aR ∩ bR = 0 in every internal degree up to max_degree,
/// via dim(Im a + Im b) = dim Im a + dim Im b on each graded piece.
bool principal_ideals_meet_trivially(const RingElement& a, const RingElement& b, int max_degree);

}  // namespace dglift
