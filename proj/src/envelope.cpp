#include "dglift/envelope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dglift/error.hpp"
#include "format_util.hpp"

namespace dglift {

Bidegree bidegree_of(const FreeDGAlgebra& alg, const EnvKey& k) {
  return {k.left.hdeg + k.right.hdeg, alg.weight(k.left) + alg.weight(k.right) + k.r.deg};
}

namespace {

std::optional<Bidegree> common_bidegree(const FreeDGAlgebra& alg, const EnvTerms& t) {
  std::optional<Bidegree> b;
  for (const auto& [k, c] : t) {
    Bidegree kb = bidegree_of(alg, k);
    if (b && *b != kb) return std::nullopt;
    b = kb;
  }
  return b;
}

void check_same(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a != b) throw Error(ErrorKind::MixedAlgebras, "elements belong to different algebras");
}

}  // namespace

namespace env {

EnvTerms mul(const FreeDGAlgebra& alg, const EnvTerms& a, const EnvTerms& b) {
  const Scalar one = alg.field().one();
  EnvTerms out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      auto r = alg.ring()->multiply(ka.r, kb.r);
      if (!r) continue;
      // (b1^o⊗b2)(b1'^o⊗b2') = (-1)^{|b1'|(|b1|+|b2|)} (b1' b1)^o ⊗ b2 b2'
      auto left = alg.multiply(kb.left, ka.left);
      if (!left) continue;
      auto right = alg.multiply(ka.right, kb.right);
      if (!right) continue;
      Scalar c = left->coeff * right->coeff * ca * cb;
      if ((kb.left.hdeg * (ka.left.hdeg + ka.right.hdeg)) % 2) c = -c;
      out.add(EnvKey{left->m, right->m, *r}, c);
    }
  return out;
}

EnvTerms diff(const FreeDGAlgebra& alg, const EnvTerms& a) {
  EnvTerms out;
  for (const auto& [k, c] : a) {
    // (d b1)^o ⊗ b2
    for (const auto& [dk, dc] : alg.differential(k.left)) {
      auto r = alg.ring()->multiply(dk.r, k.r);
      if (r) out.add(EnvKey{dk.m, k.right, *r}, dc * c);
    }
    // (-1)^{|b1|} b1^o ⊗ d b2
    const Scalar sign = k.left.hdeg % 2 ? -alg.field().one() : alg.field().one();
    for (const auto& [dk, dc] : alg.differential(k.right)) {
      auto r = alg.ring()->multiply(dk.r, k.r);
      if (r) out.add(EnvKey{k.left, dk.m, *r}, sign * dc * c);
    }
  }
  return out;
}

EnvTerms left_act(const FreeDGAlgebra& alg, const AlgTerms& b, const EnvTerms& u) {
  EnvTerms out;
  for (const auto& [kb, cb] : b)
    for (const auto& [ku, cu] : u) {
      auto r = alg.ring()->multiply(kb.r, ku.r);
      if (!r) continue;
      auto left = alg.multiply(kb.m, ku.left);
      if (left) out.add(EnvKey{left->m, ku.right, *r}, left->coeff * cb * cu);
    }
  return out;
}

EnvTerms right_act(const FreeDGAlgebra& alg, const EnvTerms& u, const AlgTerms& b) {
  EnvTerms out;
  for (const auto& [ku, cu] : u)
    for (const auto& [kb, cb] : b) {
      auto r = alg.ring()->multiply(ku.r, kb.r);
      if (!r) continue;
      auto right = alg.multiply(ku.right, kb.m);
      if (right) out.add(EnvKey{ku.left, right->m, *r}, right->coeff * cu * cb);
    }
  return out;
}

AlgTerms pi(const FreeDGAlgebra& alg, const EnvTerms& u) {
  AlgTerms out;
  for (const auto& [k, c] : u)
    if (auto m = alg.multiply(k.left, k.right)) out.add(AlgKey{m->m, k.r}, m->coeff * c);
  return out;
}

EnvTerms rho(const FreeDGAlgebra& alg, const AlgTerms& b) {
  EnvTerms out;
  for (const auto& [k, c] : b) out.add(EnvKey{alg.unit(), k.m, k.r}, c);
  return out;
}

EnvTerms sigma(const EnvTerms& u) {
  EnvTerms out;
  for (const auto& [k, c] : u)
    if (!k.left.is_one()) out.add(k, c);
  return out;
}

EnvTerms unsigma(const FreeDGAlgebra& alg, const EnvTerms& coords) {
  EnvTerms out;
  for (const auto& [k, c] : coords) {
    out.add(k, c);
    if (auto m = alg.multiply(k.left, k.right)) out.add(EnvKey{alg.unit(), m->m, k.r}, -(m->coeff * c));
  }
  return out;
}

EnvTerms delta(const FreeDGAlgebra& alg, const AlgTerms& b) {
  EnvTerms out;
  for (const auto& [k, c] : b)
    if (!k.m.is_one()) out.add(EnvKey{k.m, alg.unit(), k.r}, c);
  return out;
}

std::string key_to_string(const FreeDGAlgebra& alg, const EnvKey& k, bool sigma_form) {
  auto factor = [&](const Monomial& m) {
    std::string s = alg.monomial_to_string(m);
    if (s.empty()) return std::string("1");
    if (s.find_first_of("*^") != std::string::npos) return "(" + s + ")";
    return s;
  };
  std::string pair = factor(k.left) + "^o⊗" + factor(k.right);
  if (sigma_form) pair = "σ(" + pair + ")";
  if (!k.r.is_one()) pair += "·" + alg.ring()->monomial_to_string(k.r);
  return pair;
}

}  // namespace env

EnvelopeElement EnvelopeElement::tensor(const AlgebraElement& b1, const AlgebraElement& b2) {
  check_same(b1.algebra(), b2.algebra());
  const auto& alg = *b1.algebra();
  EnvTerms t;
  for (const auto& [k1, c1] : b1.terms())
    for (const auto& [k2, c2] : b2.terms())
      if (auto r = alg.ring()->multiply(k1.r, k2.r)) t.add(EnvKey{k1.m, k2.m, *r}, c1 * c2);
  return EnvelopeElement(b1.algebra(), std::move(t));
}

std::optional<Bidegree> EnvelopeElement::bidegree() const { return common_bidegree(*alg_, terms_); }

EnvelopeElement EnvelopeElement::operator-() const {
  EnvelopeElement out = *this;
  out.terms_.scale(-alg_->field().one());
  return out;
}

EnvelopeElement& EnvelopeElement::operator+=(const EnvelopeElement& other) {
  check_same(alg_, other.alg_);
  terms_ += other.terms_;
  return *this;
}

EnvelopeElement& EnvelopeElement::operator-=(const EnvelopeElement& other) {
  check_same(alg_, other.alg_);
  terms_ -= other.terms_;
  return *this;
}

EnvelopeElement operator*(const Scalar& s, EnvelopeElement a) {
  a.terms_.scale(s);
  return a;
}

std::string EnvelopeElement::to_string() const {
  std::vector<std::pair<Scalar, std::string>> parts;
  for (const auto& [k, c] : terms_) parts.emplace_back(c, env::key_to_string(*alg_, k, false));
  return detail::format_sum(parts, " ");
}

DiagonalElement::DiagonalElement(AlgebraPtr alg, EnvTerms sigma_coords)
    : alg_(std::move(alg)), coords_(std::move(sigma_coords)) {
  for (const auto& [k, c] : coords_)
    if (k.left.is_one()) throw std::invalid_argument("σ-coordinates must have a non-unit left factor");
}

DiagonalElement DiagonalElement::from_envelope(const EnvelopeElement& u) {
  if (!env::pi(*u.algebra(), u.terms()).is_zero())
    throw std::invalid_argument("element is not in the diagonal ideal: π(u) != 0");
  return DiagonalElement(u.algebra(), env::sigma(u.terms()));
}

std::optional<Bidegree> DiagonalElement::bidegree() const { return common_bidegree(*alg_, coords_); }

EnvelopeElement DiagonalElement::to_envelope() const { return EnvelopeElement(alg_, env::unsigma(*alg_, coords_)); }

DiagonalElement DiagonalElement::operator-() const {
  DiagonalElement out = *this;
  out.coords_.scale(-alg_->field().one());
  return out;
}

DiagonalElement& DiagonalElement::operator+=(const DiagonalElement& other) {
  check_same(alg_, other.alg_);
  coords_ += other.coords_;
  return *this;
}

DiagonalElement& DiagonalElement::operator-=(const DiagonalElement& other) {
  check_same(alg_, other.alg_);
  coords_ -= other.coords_;
  return *this;
}

DiagonalElement operator*(const Scalar& s, DiagonalElement a) {
  a.coords_.scale(s);
  return a;
}

std::string DiagonalElement::to_string() const {
  std::vector<std::pair<Scalar, std::string>> parts;
  for (const auto& [k, c] : coords_) parts.emplace_back(c, env::key_to_string(*alg_, k, true));
  return detail::format_sum(parts, " ");
}

EnvelopeElement env_mul(const EnvelopeElement& u, const EnvelopeElement& v) {
  check_same(u.algebra(), v.algebra());
  return EnvelopeElement(u.algebra(), env::mul(*u.algebra(), u.terms(), v.terms()));
}

EnvelopeElement env_diff(const EnvelopeElement& u) {
  return EnvelopeElement(u.algebra(), env::diff(*u.algebra(), u.terms()));
}

AlgebraElement pi(const EnvelopeElement& u) { return AlgebraElement(u.algebra(), env::pi(*u.algebra(), u.terms())); }

EnvelopeElement rho(const AlgebraElement& b) {
  return EnvelopeElement(b.algebra(), env::rho(*b.algebra(), b.terms()));
}

DiagonalElement sigma(const EnvelopeElement& u) { return DiagonalElement(u.algebra(), env::sigma(u.terms())); }

DiagonalElement diagonal_diff(const DiagonalElement& j) {
  const auto& alg = *j.algebra();
  return DiagonalElement(j.algebra(), env::sigma(env::diff(alg, env::unsigma(alg, j.coords()))));
}

DiagonalElement universal_delta(const AlgebraElement& b) {
  return DiagonalElement(b.algebra(), env::delta(*b.algebra(), b.terms()));
}

EnvelopeElement bimodule_act(Side side, const AlgebraElement& b, const EnvelopeElement& u) {
  check_same(b.algebra(), u.algebra());
  const auto& alg = *u.algebra();
  return EnvelopeElement(u.algebra(), side == Side::Left ? env::left_act(alg, b.terms(), u.terms())
                                                         : env::right_act(alg, u.terms(), b.terms()));
}

DiagonalElement bimodule_act(Side side, const AlgebraElement& b, const DiagonalElement& j) {
  return sigma(bimodule_act(side, b, j.to_envelope()));
}

std::vector<EnvKey> envelope_basis(const FreeDGAlgebra& alg, Bidegree b) {
  std::vector<EnvKey> out;
  // group monomials by weight to pair them quickly
  for (int n1 = 0; n1 <= b.hdeg; ++n1) {
    const auto lefts = alg.monomial_basis(n1);
    const auto rights = alg.monomial_basis(b.hdeg - n1);
    for (const auto& m1 : lefts)
      for (const auto& m2 : rights) {
        const int rest = b.wdeg - alg.weight(m1) - alg.weight(m2);
        if (rest < 0) continue;
        for (const auto& r : alg.ring()->basis(rest)) out.push_back(EnvKey{m1, m2, r});
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EnvKey> diagonal_basis(const FreeDGAlgebra& alg, Bidegree b) {
  auto all = envelope_basis(alg, b);
  std::erase_if(all, [](const EnvKey& k) { return k.left.is_one(); });
  return all;
}

BlockMatrix diagonal_boundary(const AlgebraPtr& alg, Bidegree source) {
  const auto src = diagonal_basis(*alg, source);
  const auto dst = diagonal_basis(*alg, {source.hdeg - 1, source.wdeg});
  std::map<EnvKey, std::size_t> row_of;
  for (std::size_t i = 0; i < dst.size(); ++i) row_of.emplace(dst[i], i);

  BlockMatrix block{{}, {}, Matrix(alg->field(), dst.size(), src.size())};
  for (const auto& k : src) block.source.push_back(env::key_to_string(*alg, k, true));
  for (const auto& k : dst) block.target.push_back(env::key_to_string(*alg, k, true));
  const Scalar one = alg->field().one();
  for (std::size_t j = 0; j < src.size(); ++j) {
    EnvTerms unit;
    unit.add(src[j], one);
    const EnvTerms image = env::sigma(env::diff(*alg, env::unsigma(*alg, unit)));
    for (const auto& [k, c] : image) block.entries(row_of.at(k), j) = c;
  }
  return block;
}

DiagonalHomology diagonal_homology(const AlgebraPtr& alg, Bidegree b) {
  const BlockMatrix outgoing = diagonal_boundary(alg, b);
  const BlockMatrix incoming = diagonal_boundary(alg, {b.hdeg + 1, b.wdeg});
  DiagonalHomology h;
  h.bidegree = b;
  h.dimension = outgoing.source.size();
  h.cycles = h.dimension - rank(outgoing.entries);
  h.boundaries = rank(incoming.entries);
  h.homology = homology_dim(incoming.entries, outgoing.entries);
  return h;
}

}  // namespace dglift
