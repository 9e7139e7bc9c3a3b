#include "dglift/free_dga.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dglift/error.hpp"
#include "format_util.hpp"

namespace dglift {

std::weak_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.hdeg <=> b.hdeg; c != 0) return c;
  if (a.exps == b.exps) return std::weak_ordering::equivalent;
  return b.exps < a.exps ? std::weak_ordering::less : std::weak_ordering::greater;
}

std::optional<std::size_t> FreeDGAlgebra::find_variable(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

Monomial FreeDGAlgebra::unit() const { return Monomial{std::vector<std::uint32_t>(vars_.size(), 0), 0}; }

Monomial FreeDGAlgebra::make_monomial(std::vector<std::uint32_t> exps) const {
  Monomial m{std::move(exps), 0};
  for (std::size_t i = 0; i < vars_.size(); ++i) m.hdeg += static_cast<int>(m.exps[i]) * vars_[i].hdeg;
  return m;
}

Monomial FreeDGAlgebra::variable_power(std::size_t i, std::uint32_t n) const {
  std::vector<std::uint32_t> e(vars_.size(), 0);
  e.at(i) = n;
  return make_monomial(std::move(e));
}

int FreeDGAlgebra::weight(const Monomial& m) const {
  int w = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) w += static_cast<int>(m.exps[i]) * vars_[i].wdeg;
  return w;
}

std::optional<FreeDGAlgebra::MonomialProduct> FreeDGAlgebra::multiply(const Monomial& a, const Monomial& b) const {
  const GroundField k = field();
  mpz_class coeff = 1;
  int inversions = 0;
  int odd_in_b_before = 0;  // odd letters of b at indices < i
  // Count pairs (i in a, j in b, i > j) of odd letters: each is one swap.
  std::vector<std::uint32_t> exps(vars_.size(), 0);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].odd()) {
      if (a.exps[i] && b.exps[i]) return std::nullopt;
      if (a.exps[i]) inversions += odd_in_b_before;
      if (b.exps[i]) ++odd_in_b_before;
      exps[i] = a.exps[i] + b.exps[i];
    } else {
      exps[i] = a.exps[i] + b.exps[i];
      if (a.exps[i] && b.exps[i]) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), exps[i], a.exps[i]);
        coeff *= binom;
      }
    }
  }
  if (inversions % 2) coeff = -coeff;
  Scalar c = k.from_mpz(coeff);
  if (c.is_zero()) return std::nullopt;
  return MonomialProduct{c, Monomial{std::move(exps), a.hdeg + b.hdeg}};
}

AlgTerms FreeDGAlgebra::multiply(const AlgTerms& a, const AlgTerms& b) const {
  AlgTerms out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      auto r = ring_->multiply(ka.r, kb.r);
      if (!r) continue;
      auto m = multiply(ka.m, kb.m);
      if (!m) continue;
      out.add(AlgKey{m->m, *r}, m->coeff * ca * cb);
    }
  return out;
}

AlgTerms FreeDGAlgebra::differential(const Monomial& m) const {
  AlgTerms out;
  auto first = std::find_if(m.exps.begin(), m.exps.end(), [](auto e) { return e != 0; });
  if (first == m.exps.end()) return out;
  const auto i = static_cast<std::size_t>(first - m.exps.begin());
  const Scalar one = field().one();

  const Monomial factor = variable_power(i, m.exps[i]);
  Monomial rest = m;
  rest.exps[i] = 0;
  rest.hdeg -= factor.hdeg;

  AlgTerms factor_terms, rest_terms, d_factor;
  factor_terms.add(AlgKey{factor, ring_->unit()}, one);
  rest_terms.add(AlgKey{rest, ring_->unit()}, one);
  if (vars_[i].odd()) {
    d_factor = diffs_[i];
  } else {
    // d(Y^(n)) = Y^(n-1) dY
    AlgTerms lower;
    lower.add(AlgKey{variable_power(i, m.exps[i] - 1), ring_->unit()}, one);
    d_factor = multiply(lower, diffs_[i]);
  }
  out += multiply(d_factor, rest_terms);
  AlgTerms tail = multiply(factor_terms, differential(rest));
  if (factor.hdeg % 2) tail.scale(-one);
  out += tail;
  return out;
}

AlgTerms FreeDGAlgebra::differential(const AlgTerms& a) const {
  AlgTerms out;
  for (const auto& [k, c] : a) {
    for (const auto& [dk, dc] : differential(k.m)) {
      auto r = ring_->multiply(dk.r, k.r);
      if (r) out.add(AlgKey{dk.m, *r}, dc * c);
    }
  }
  return out;
}

std::vector<Monomial> FreeDGAlgebra::monomial_basis(int n) const {
  std::vector<Monomial> out;
  if (n < 0) return out;
  std::vector<std::uint32_t> exps(vars_.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == vars_.size()) {
      if (left == 0) out.push_back(make_monomial(exps));
      return;
    }
    const int d = vars_[i].hdeg;
    const int max_e = vars_[i].odd() ? 1 : left / d;
    for (int e = 0; e <= max_e && e * d <= left; ++e) {
      exps[i] = static_cast<std::uint32_t>(e);
      rec(i + 1, left - e * d);
    }
    exps[i] = 0;
  };
  rec(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AlgKey> FreeDGAlgebra::basis(Bidegree b) const {
  std::vector<AlgKey> out;
  for (const auto& m : monomial_basis(b.hdeg)) {
    const int rest = b.wdeg - weight(m);
    if (rest < 0) continue;
    for (const auto& r : ring_->basis(rest)) out.push_back(AlgKey{m, r});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string FreeDGAlgebra::monomial_to_string(const Monomial& m) const {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (vars_[i].odd() || m.exps[i] == 1)
      parts.push_back(vars_[i].name);
    else
      parts.push_back(vars_[i].name + "^(" + std::to_string(m.exps[i]) + ")");
  }
  return detail::join(parts, "*");
}

std::string FreeDGAlgebra::key_to_string(const AlgKey& k) const {
  std::string m = monomial_to_string(k.m);
  std::string r = ring_->monomial_to_string(k.r);
  if (m.empty()) return r;
  if (r.empty()) return m;
  return m + "*" + r;
}

std::string FreeDGAlgebra::terms_to_string(const AlgTerms& t) const {
  std::vector<std::pair<Scalar, std::string>> parts;
  for (const auto& [k, c] : t) parts.emplace_back(c, key_to_string(k));
  return detail::format_sum(parts);
}

namespace {

void check_names(const BaseRing& ring, const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& g : ring.generators()) seen.insert(g.name);
  for (const auto& n : names)
    if (!seen.insert(n).second) throw Error(ErrorKind::DuplicateGenerator, "duplicate name '" + n + "'");
}

}  // namespace

AlgebraPtr make_skeleton(RingPtr ring, const std::vector<std::pair<std::string, int>>& vars) {
  std::shared_ptr<FreeDGAlgebra> alg(new FreeDGAlgebra());
  alg->ring_ = std::move(ring);
  alg->skeleton_ = true;
  std::vector<std::string> names;
  for (const auto& [name, hdeg] : vars) {
    if (hdeg <= 0)
      throw Error(ErrorKind::InvalidDegree, "variable '" + name + "' must have positive homological degree");
    alg->vars_.push_back(Variable{name, hdeg, 0});
    names.push_back(name);
  }
  check_names(*alg->ring_, names);
  alg->diffs_.resize(alg->vars_.size());
  return alg;
}

AlgebraPtr build_algebra(RingPtr ring, const std::vector<VariableSpec>& specs) {
  std::shared_ptr<FreeDGAlgebra> alg(new FreeDGAlgebra());
  alg->ring_ = std::move(ring);
  std::vector<std::string> names;
  for (const auto& s : specs) {
    if (s.hdeg <= 0)
      throw Error(ErrorKind::InvalidDegree, "variable '" + s.name + "' must have positive homological degree");
    alg->vars_.push_back(Variable{s.name, s.hdeg, 0});
    names.push_back(s.name);
  }
  check_names(*alg->ring_, names);
  const std::size_t n = specs.size();
  alg->diffs_.resize(n);

  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = specs[i];
    AlgTerms d;
    std::optional<int> inferred;
    for (const auto& [k, c] : s.differential) {
      if (k.m.exps.size() != n || k.r.exps.size() != alg->ring_->num_generators())
        throw Error(ErrorKind::GradingViolation, "d" + s.name + " has a malformed term");
      for (std::size_t j = i; j < n; ++j)
        if (k.m.exps[j] != 0)
          throw Error(ErrorKind::ForwardReference,
                      "d" + s.name + " uses variable '" + specs[j].name + "' which is not declared before it");
      for (std::size_t j = 0; j < i; ++j)
        if (alg->vars_[j].odd() && k.m.exps[j] > 1)
          throw Error(ErrorKind::GradingViolation, "odd variable '" + specs[j].name + "' with exponent > 1");
      AlgKey key{alg->make_monomial(k.m.exps), alg->ring_->make_monomial(k.r.exps)};
      if (key.m.hdeg != s.hdeg - 1)
        throw Error(ErrorKind::GradingViolation, "d" + s.name + " must have homological degree " +
                                                     std::to_string(s.hdeg - 1) + ", found a term of degree " +
                                                     std::to_string(key.m.hdeg));
      if (!alg->ring_->is_standard(key.r)) continue;
      const int w = alg->weight(key.m) + key.r.deg;
      if (inferred && *inferred != w)
        throw Error(ErrorKind::GradingViolation, "d" + s.name + " is not homogeneous in the internal degree");
      inferred = w;
      d.add(key, c);
    }
    int w = 1;
    if (inferred) {
      if (s.wdeg && *s.wdeg != *inferred)
        throw Error(ErrorKind::GradingViolation, "variable '" + s.name + "' declared with internal degree " +
                                                     std::to_string(*s.wdeg) + " but d" + s.name +
                                                     " has internal degree " + std::to_string(*inferred));
      w = *inferred;
    } else if (s.wdeg) {
      w = *s.wdeg;
    }
    if (w <= 0)
      throw Error(ErrorKind::GradingViolation,
                  "variable '" + s.name + "' must have positive internal degree, got " + std::to_string(w));
    alg->vars_[i].wdeg = w;
    alg->diffs_[i] = std::move(d);
  }

  for (std::size_t i = 0; i < n; ++i) {
    AlgTerms dd = alg->differential(alg->diffs_[i]);
    if (!dd.is_zero())
      throw Error(ErrorKind::CycleViolation, "d(d" + specs[i].name + ") = " + alg->terms_to_string(dd) + " is not zero");
  }
  return alg;
}

AlgebraElement::AlgebraElement(AlgebraPtr alg, AlgTerms terms) : alg_(std::move(alg)), terms_(std::move(terms)) {}

AlgebraElement AlgebraElement::one(AlgebraPtr alg) {
  AlgTerms t;
  t.add(AlgKey{alg->unit(), alg->ring()->unit()}, alg->field().one());
  return AlgebraElement(std::move(alg), std::move(t));
}

AlgebraElement AlgebraElement::variable(AlgebraPtr alg, std::size_t i, std::uint32_t n) {
  if (n > 1 && alg->variables().at(i).odd()) return AlgebraElement(std::move(alg));
  AlgTerms t;
  t.add(AlgKey{alg->variable_power(i, n), alg->ring()->unit()}, alg->field().one());
  return AlgebraElement(std::move(alg), std::move(t));
}

AlgebraElement AlgebraElement::from_ring(AlgebraPtr alg, const RingElement& r) {
  if (r.ring() != alg->ring()) throw Error(ErrorKind::MixedRings, "ring element from a different base ring");
  AlgTerms t;
  for (const auto& [m, c] : r.terms()) t.add(AlgKey{alg->unit(), m}, c);
  return AlgebraElement(std::move(alg), std::move(t));
}

AlgebraElement AlgebraElement::from_key(AlgebraPtr alg, const AlgKey& k, const Scalar& c) {
  AlgTerms t;
  t.add(k, c);
  return AlgebraElement(std::move(alg), std::move(t));
}

std::optional<Bidegree> AlgebraElement::bidegree() const {
  std::optional<Bidegree> b;
  for (const auto& [k, c] : terms_) {
    Bidegree kb = alg_->bidegree(k);
    if (b && *b != kb) return std::nullopt;
    b = kb;
  }
  return b;
}

std::map<Bidegree, AlgebraElement> AlgebraElement::components() const {
  std::map<Bidegree, AlgebraElement> out;
  for (const auto& [k, c] : terms_) {
    auto [it, _] = out.try_emplace(alg_->bidegree(k), alg_);
    it->second.terms_.add(k, c);
  }
  return out;
}

RingElement AlgebraElement::coefficient(const Monomial& m) const {
  RingElement out(alg_->ring());
  for (const auto& [k, c] : terms_)
    if (k.m == m) out += RingElement(alg_->ring(), k.r, c);
  return out;
}

void AlgebraElement::check_same_algebra(const AlgebraElement& other) const {
  if (alg_ != other.alg_) throw Error(ErrorKind::MixedAlgebras, "algebra elements belong to different algebras");
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  out.terms_.scale(-alg_->field().one());
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  check_same_algebra(other);
  terms_ += other.terms_;
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  check_same_algebra(other);
  terms_ -= other.terms_;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_same_algebra(b);
  return AlgebraElement(a.alg_, a.alg_->multiply(a.terms_, b.terms_));
}

AlgebraElement operator*(const Scalar& s, AlgebraElement a) {
  a.terms_.scale(s);
  return a;
}

AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

AlgebraElement alg_diff(const AlgebraElement& a) {
  return AlgebraElement(a.algebra(), a.algebra()->differential(a.terms()));
}

}  // namespace dglift
