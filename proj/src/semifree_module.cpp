#include "dglift/semifree_module.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "dglift/error.hpp"
#include "format_util.hpp"

namespace dglift {

namespace {

void check_same(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a != b) throw Error(ErrorKind::MixedAlgebras, "elements belong to different algebras");
}

Scalar parity_sign(const GroundField& f, int deg) { return deg % 2 ? -f.one() : f.one(); }

// Splits label-indexed terms into per-label algebra or envelope terms.
std::map<std::size_t, AlgTerms> by_label(const ModTerms& t) {
  std::map<std::size_t, AlgTerms> out;
  for (const auto& [k, c] : t) out[k.label].add(AlgKey{k.m, k.r}, c);
  return out;
}

std::map<std::size_t, EnvTerms> by_label(const TensorTerms& t) {
  std::map<std::size_t, EnvTerms> out;
  for (const auto& [k, c] : t) out[k.label].add(k.env(), c);
  return out;
}

void add_labelled(ModTerms& out, std::size_t label, const AlgTerms& t, const Scalar& s) {
  for (const auto& [k, c] : t) out.add(ModKey{label, k.m, k.r}, s * c);
}

void add_labelled(TensorTerms& out, std::size_t label, const EnvTerms& t, const Scalar& s) {
  for (const auto& [k, c] : t) out.add(TensorKey{label, k.left, k.right, k.r}, s * c);
}

}  // namespace

// ModuleElement

ModuleElement ModuleElement::basis_times(std::size_t label, const AlgebraElement& b) {
  ModTerms t;
  add_labelled(t, label, b.terms(), b.algebra()->field().one());
  return ModuleElement(b.algebra(), std::move(t));
}

AlgebraElement ModuleElement::component(std::size_t label) const {
  AlgTerms t;
  for (const auto& [k, c] : terms_)
    if (k.label == label) t.add(AlgKey{k.m, k.r}, c);
  return AlgebraElement(alg_, std::move(t));
}

ModuleElement ModuleElement::operator-() const {
  ModuleElement out = *this;
  out.terms_.scale(-alg_->field().one());
  return out;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& other) {
  check_same(alg_, other.alg_);
  terms_ += other.terms_;
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& other) {
  check_same(alg_, other.alg_);
  terms_ -= other.terms_;
  return *this;
}

ModuleElement operator*(const ModuleElement& n, const AlgebraElement& b) {
  check_same(n.alg_, b.algebra());
  ModTerms out;
  for (const auto& [label, t] : by_label(n.terms_))
    add_labelled(out, label, n.alg_->multiply(t, b.terms()), n.alg_->field().one());
  return ModuleElement(n.alg_, std::move(out));
}

ModuleElement operator*(const Scalar& s, ModuleElement a) {
  a.terms_.scale(s);
  return a;
}

// TensorJElement

TensorJElement::TensorJElement(AlgebraPtr alg, TensorTerms coords) : alg_(std::move(alg)), coords_(std::move(coords)) {
  for (const auto& [k, c] : coords_)
    if (k.left.is_one()) throw std::invalid_argument("σ-coordinates must have a non-unit left factor");
}

TensorJElement TensorJElement::basis_tensor(std::size_t label, const DiagonalElement& j) {
  TensorTerms t;
  add_labelled(t, label, j.coords(), j.algebra()->field().one());
  return TensorJElement(j.algebra(), std::move(t));
}

DiagonalElement TensorJElement::component(std::size_t label) const {
  EnvTerms t;
  for (const auto& [k, c] : coords_)
    if (k.label == label) t.add(k.env(), c);
  return DiagonalElement(alg_, std::move(t));
}

TensorJElement TensorJElement::operator-() const {
  TensorJElement out = *this;
  out.coords_.scale(-alg_->field().one());
  return out;
}

TensorJElement& TensorJElement::operator+=(const TensorJElement& other) {
  check_same(alg_, other.alg_);
  coords_ += other.coords_;
  return *this;
}

TensorJElement& TensorJElement::operator-=(const TensorJElement& other) {
  check_same(alg_, other.alg_);
  coords_ -= other.coords_;
  return *this;
}

TensorJElement operator*(const TensorJElement& t, const AlgebraElement& b) {
  check_same(t.alg_, b.algebra());
  const auto& alg = *t.alg_;
  TensorTerms out;
  for (const auto& [label, j] : by_label(t.coords_))
    add_labelled(out, label, env::sigma(env::right_act(alg, env::unsigma(alg, j), b.terms())), alg.field().one());
  return TensorJElement(t.alg_, std::move(out));
}

TensorJElement operator*(const Scalar& s, TensorJElement a) {
  a.coords_.scale(s);
  return a;
}

// TensorEnvElement

TensorEnvElement& TensorEnvElement::operator+=(const TensorEnvElement& other) {
  check_same(alg_, other.alg_);
  terms_ += other.terms_;
  return *this;
}

TensorEnvElement& TensorEnvElement::operator-=(const TensorEnvElement& other) {
  check_same(alg_, other.alg_);
  terms_ -= other.terms_;
  return *this;
}

// SemifreeModule

std::optional<std::size_t> SemifreeModule::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].label == label) return i;
  return std::nullopt;
}

bool SemifreeModule::has_zero_differential() const {
  for (const auto& row : matrix_)
    for (const auto& b : row)
      if (!b.is_zero()) return false;
  return true;
}

Bidegree SemifreeModule::bidegree(const ModKey& k) const {
  return basis_.at(k.label).bidegree() + alg_->bidegree(AlgKey{k.m, k.r});
}

Bidegree SemifreeModule::bidegree(const TensorKey& k) const {
  return basis_.at(k.label).bidegree() + bidegree_of(*alg_, k.env());
}

ModuleElement SemifreeModule::basis_element(std::size_t label) const {
  return ModuleElement::basis_times(label, AlgebraElement::one(alg_));
}

ModuleElement SemifreeModule::boundary_of_basis(std::size_t label) const {
  ModuleElement out(alg_);
  for (std::size_t mu = 0; mu < label; ++mu) out += ModuleElement::basis_times(mu, matrix_[mu][label]);
  return out;
}

ModuleElement SemifreeModule::diff(const ModuleElement& v) const {
  check_same(alg_, v.algebra());
  const Scalar one = alg_->field().one();
  ModTerms out;
  for (const auto& [lambda, b] : by_label(v.terms())) {
    // (∂e_λ) b + (-1)^{|e_λ|} e_λ d(b)
    for (std::size_t mu = 0; mu < lambda; ++mu)
      if (!matrix_[mu][lambda].is_zero())
        add_labelled(out, mu, alg_->multiply(matrix_[mu][lambda].terms(), b), one);
    add_labelled(out, lambda, alg_->differential(b), parity_sign(alg_->field(), basis_[lambda].hdeg));
  }
  return ModuleElement(alg_, std::move(out));
}

TensorJElement SemifreeModule::diff(const TensorJElement& t) const {
  check_same(alg_, t.algebra());
  const auto& alg = *alg_;
  const Scalar one = alg.field().one();
  TensorTerms out;
  for (const auto& [lambda, j] : by_label(t.coords())) {
    const EnvTerms raw = env::unsigma(alg, j);
    // Σ_μ e_μ ⊗ b_μλ·j + (-1)^{|e_λ|} e_λ ⊗ ∂j
    for (std::size_t mu = 0; mu < lambda; ++mu)
      if (!matrix_[mu][lambda].is_zero())
        add_labelled(out, mu, env::sigma(env::left_act(alg, matrix_[mu][lambda].terms(), raw)), one);
    add_labelled(out, lambda, env::sigma(env::diff(alg, raw)), parity_sign(alg.field(), basis_[lambda].hdeg));
  }
  return TensorJElement(alg_, std::move(out));
}

TensorEnvElement SemifreeModule::diff(const TensorEnvElement& t) const {
  check_same(alg_, t.algebra());
  const auto& alg = *alg_;
  const Scalar one = alg.field().one();
  TensorTerms out;
  for (const auto& [lambda, u] : by_label(t.terms())) {
    for (std::size_t mu = 0; mu < lambda; ++mu)
      if (!matrix_[mu][lambda].is_zero())
        add_labelled(out, mu, env::left_act(alg, matrix_[mu][lambda].terms(), u), one);
    add_labelled(out, lambda, env::diff(alg, u), parity_sign(alg.field(), basis_[lambda].hdeg));
  }
  return TensorEnvElement(alg_, std::move(out));
}

std::vector<ModKey> SemifreeModule::element_basis(Bidegree b) const {
  std::vector<ModKey> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (const auto& k : alg_->basis(b - basis_[i].bidegree())) out.push_back(ModKey{i, k.m, k.r});
  return out;
}

std::vector<TensorKey> SemifreeModule::tensor_j_basis(Bidegree b) const {
  std::vector<TensorKey> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Bidegree rest = b - basis_[i].bidegree();
    if (rest.hdeg < 0 || rest.wdeg < 0) continue;
    for (const auto& k : diagonal_basis(*alg_, rest)) out.push_back(TensorKey{i, k.left, k.right, k.r});
  }
  return out;
}

std::string SemifreeModule::to_string(const ModuleElement& v) const {
  std::vector<std::pair<Scalar, std::string>> parts;
  for (const auto& [k, c] : v.terms()) {
    std::string body = basis_.at(k.label).label;
    const std::string coeff = alg_->key_to_string(AlgKey{k.m, k.r});
    if (!coeff.empty()) body += "*" + coeff;
    parts.emplace_back(c, body);
  }
  return detail::format_sum(parts);
}

std::string SemifreeModule::key_to_string(const TensorKey& k) const {
  return basis_.at(k.label).label + "⊗" + env::key_to_string(*alg_, k.env(), true);
}

std::string SemifreeModule::to_string(const TensorJElement& t) const {
  std::vector<std::pair<Scalar, std::string>> parts;
  for (const auto& [k, c] : t.coords()) parts.emplace_back(c, key_to_string(k));
  return detail::format_sum(parts, " ");
}

std::string SemifreeModule::to_string(const TensorEnvElement& t) const {
  std::vector<std::pair<Scalar, std::string>> parts;
  for (const auto& [k, c] : t.terms())
    parts.emplace_back(c, basis_.at(k.label).label + "⊗" + env::key_to_string(*alg_, k.env(), false));
  return detail::format_sum(parts, " ");
}

ModulePtr build_module(AlgebraPtr alg, const ModuleSpec& spec, bool check_square) {
  if (spec.differentials.size() != spec.basis.size())
    throw Error(ErrorKind::DimensionMismatch, "one differential is required per basis element");
  std::shared_ptr<SemifreeModule> n(new SemifreeModule());
  n->alg_ = alg;
  const std::size_t k = spec.basis.size();

  std::set<std::string> seen;
  for (const auto& b : spec.basis)
    if (!seen.insert(b.label).second) throw Error(ErrorKind::DuplicateGenerator, "duplicate basis label '" + b.label + "'");

  n->matrix_.assign(k, std::vector<AlgebraElement>(k, AlgebraElement(alg)));
  for (std::size_t lambda = 0; lambda < k; ++lambda) {
    const auto& bs = spec.basis[lambda];
    const ModuleElement& d = spec.differentials[lambda];
    check_same(alg, d.algebra());
    std::optional<int> inferred;
    for (const auto& [key, c] : d.terms()) {
      if (key.label >= lambda) {
        const std::string other = key.label < k ? spec.basis[key.label].label : "?";
        throw Error(ErrorKind::TriangularityViolation,
                    "d" + bs.label + " involves " + other + ", which is not an earlier basis element");
      }
      const BasisElement& mu = n->basis_[key.label];
      const Bidegree term = mu.bidegree() + alg->bidegree(AlgKey{key.m, key.r});
      if (term.hdeg != bs.hdeg - 1)
        throw Error(ErrorKind::DegreeMismatch, "d" + bs.label + " has a term of homological degree " +
                                                   std::to_string(term.hdeg) + ", expected " +
                                                   std::to_string(bs.hdeg - 1));
      if (inferred && *inferred != term.wdeg)
        throw Error(ErrorKind::DegreeMismatch, "d" + bs.label + " is not homogeneous in internal degree");
      inferred = term.wdeg;
    }
    if (bs.wdeg && inferred && *bs.wdeg != *inferred)
      throw Error(ErrorKind::DegreeMismatch, "basis element " + bs.label + " is declared with internal degree " +
                                                 std::to_string(*bs.wdeg) + " but d" + bs.label + " has " +
                                                 std::to_string(*inferred));
    n->basis_.push_back(BasisElement{bs.label, bs.hdeg, bs.wdeg ? *bs.wdeg : inferred.value_or(0)});
    for (std::size_t mu = 0; mu < lambda; ++mu) n->matrix_[mu][lambda] = d.component(mu);
  }

  if (check_square) {
    // Σ_{ν<μ<λ} b_νμ b_μλ + (-1)^{|e_ν|} d b_νλ = 0
    for (std::size_t lambda = 0; lambda < k; ++lambda)
      for (std::size_t nu = 0; nu < lambda; ++nu) {
        AlgebraElement s = parity_sign(alg->field(), n->basis_[nu].hdeg) * alg_diff(n->matrix_[nu][lambda]);
        for (std::size_t mu = nu + 1; mu < lambda; ++mu) s += n->matrix_[nu][mu] * n->matrix_[mu][lambda];
        if (!s.is_zero())
          throw Error(ErrorKind::DifferentialSquareNonzero,
                      "∂²(" + n->basis_[lambda].label + ") has " + n->basis_[nu].label + "-coefficient " +
                          s.to_string() + " (pair " + n->basis_[nu].label + ", " + n->basis_[lambda].label + ")");
      }
  }
  return n;
}

TensorEnvElement rho_N(const SemifreeModule& n, const ModuleElement& v) {
  const auto& alg = *n.algebra();
  TensorTerms out;
  for (const auto& [k, c] : v.terms()) out.add(TensorKey{k.label, alg.unit(), k.m, k.r}, c);
  return TensorEnvElement(n.algebra(), std::move(out));
}

TensorJElement sigma_N(const SemifreeModule& n, const TensorEnvElement& t) {
  TensorTerms out;
  for (const auto& [k, c] : t.terms())
    if (!k.left.is_one()) out.add(k, c);
  return TensorJElement(n.algebra(), std::move(out));
}

ModuleElement pi_N(const SemifreeModule& n, const TensorEnvElement& t) {
  const auto& alg = *n.algebra();
  ModTerms out;
  for (const auto& [k, c] : t.terms())
    if (auto m = alg.multiply(k.left, k.right)) out.add(ModKey{k.label, m->m, k.r}, m->coeff * c);
  return ModuleElement(n.algebra(), std::move(out));
}

TensorEnvElement iota_N(const SemifreeModule& n, const TensorJElement& t) {
  const auto& alg = *n.algebra();
  TensorTerms out;
  for (const auto& [label, j] : by_label(t.coords())) add_labelled(out, label, env::unsigma(alg, j), alg.field().one());
  return TensorEnvElement(n.algebra(), std::move(out));
}

BlockMatrix tensor_j_boundary(const SemifreeModule& n, Bidegree source) {
  const auto src = n.tensor_j_basis(source);
  const auto dst = n.tensor_j_basis(source - Bidegree{1, 0});
  std::map<TensorKey, std::size_t> row_of;
  for (std::size_t i = 0; i < dst.size(); ++i) row_of.emplace(dst[i], i);
  BlockMatrix block{{}, {}, Matrix(n.algebra()->field(), dst.size(), src.size())};
  for (const auto& k : src) block.source.push_back(n.key_to_string(k));
  for (const auto& k : dst) block.target.push_back(n.key_to_string(k));
  for (std::size_t j = 0; j < src.size(); ++j) {
    TensorTerms unit;
    unit.add(src[j], n.algebra()->field().one());
    const TensorJElement image = n.diff(TensorJElement(n.algebra(), std::move(unit)));
    for (const auto& [k, c] : image.coords()) block.entries(row_of.at(k), j) = c;
  }
  return block;
}

TensorJElement tensor_delta(const SemifreeModule& n, const ModuleElement& v, const AlgebraElement& b) {
  const auto& alg = *n.algebra();
  const EnvTerms d = env::unsigma(alg, env::delta(alg, b.terms()));
  TensorTerms out;
  for (const auto& [label, c] : by_label(v.terms()))
    add_labelled(out, label, env::sigma(env::left_act(alg, c, d)), alg.field().one());
  return TensorJElement(n.algebra(), std::move(out));
}

}  // namespace dglift
