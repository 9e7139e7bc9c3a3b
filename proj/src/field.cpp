#include "dglift/field.hpp"

#include "dglift/error.hpp"

namespace dglift {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::int64_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return r.get_si();
}

}  // namespace

GroundField GroundField::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error(ErrorKind::InvalidField, "FF(" + std::to_string(p) + "): modulus must be a prime below 2^31");
  return GroundField(p);
}

Scalar GroundField::zero() const { return from_int(0); }
Scalar GroundField::one() const { return from_int(1); }

Scalar GroundField::from_int(long value) const { return from_mpz(mpz_class(value)); }

Scalar GroundField::from_mpz(const mpz_class& value) const {
  Scalar s;
  s.p_ = p_;
  if (p_ == 0)
    s.q_ = value;
  else
    s.residue_ = reduce(value, p_);
  return s;
}

Scalar GroundField::from_fraction(const mpz_class& num, const mpz_class& den) const {
  Scalar d = from_mpz(den);
  if (d.is_zero()) throw Error(ErrorKind::InvalidField, "division by zero in " + name());
  return from_mpz(num) / d;
}

std::string GroundField::name() const { return p_ == 0 ? "QQ" : "FF(" + std::to_string(p_) + ")"; }

GroundField Scalar::field() const { return p_ == 0 ? GroundField::rationals() : GroundField::prime(p_); }

void Scalar::check_same_field(const Scalar& other) const {
  if (p_ != other.p_) throw Error(ErrorKind::MixedRings, "scalars from different ground fields");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = -q_;
  else if (residue_ != 0)
    s.residue_ = p_ - residue_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (p_ == 0)
    q_ += other.q_;
  else
    residue_ = (residue_ + other.residue_) % p_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (p_ == 0)
    q_ *= other.q_;
  else
    residue_ = residue_ * other.residue_ % p_;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidField, "inverse of zero");
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = 1 / q_;
  else
    s.residue_ = mod_pow(residue_, p_ - 2, p_);
  return s;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const { return p_ == 0 ? q_.get_str() : std::to_string(residue_); }

}  // namespace dglift
