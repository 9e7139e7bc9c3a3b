#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace dglift {

class Scalar;

/// Ground field: the rationals (characteristic 0) or a prime field F_p.
class GroundField {
 public:
  static GroundField rationals() { return GroundField(0); }
  /// Throws Error(InvalidField) unless p is a prime below 2^31.
  static GroundField prime(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_mpz(const mpz_class& value) const;
  /// num/den; throws Error(InvalidField) when den vanishes in this field.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  std::string name() const;

  friend bool operator==(GroundField, GroundField) = default;

 private:
  explicit GroundField(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// An exact element of a GroundField. Prime-field values are kept as
/// residues in [0, p); rational values use GMP.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  GroundField field() const;
  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : residue_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : residue_ == 1; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Negative for rationals below zero; prime-field values are never negative.
  bool is_negative() const { return p_ == 0 && sgn(q_) < 0; }
  std::string to_string() const;

 private:
  friend class GroundField;
  void check_same_field(const Scalar& other) const;

  std::uint32_t p_ = 0;
  std::int64_t residue_ = 0;
  mpq_class q_;
};

}  // namespace dglift
