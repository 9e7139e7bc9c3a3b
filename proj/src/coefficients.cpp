#include "dglift/coefficients.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dglift/error.hpp"
#include "dglift/exact_linalg.hpp"
#include "format_util.hpp"

namespace dglift {

std::weak_ordering operator<=>(const RMono& a, const RMono& b) {
  if (auto c = a.deg <=> b.deg; c != 0) return c;
  // larger exponent vectors first
  if (a.exps == b.exps) return std::weak_ordering::equivalent;
  return b.exps < a.exps ? std::weak_ordering::less : std::weak_ordering::greater;
}

namespace {

bool divides(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

RingPtr build_base_ring(const RingSpec& spec) {
  std::shared_ptr<BaseRing> ring(new BaseRing());
  ring->field_ = spec.field;
  std::set<std::string> names;
  for (const auto& g : spec.generators) {
    if (!names.insert(g.name).second)
      throw Error(ErrorKind::DuplicateGenerator, "duplicate ring generator '" + g.name + "'");
    if (g.degree <= 0)
      throw Error(ErrorKind::InvalidDegree,
                  "ring generator '" + g.name + "' must have positive degree, got " + std::to_string(g.degree));
  }
  ring->generators_ = spec.generators;

  std::vector<RMono> rels;
  for (const auto& exps : spec.relations) {
    if (exps.size() != spec.generators.size())
      throw Error(ErrorKind::NonMonomialRelation, "relation exponent vector has the wrong length");
    RMono m = ring->make_monomial(exps);
    if (m.is_one()) throw Error(ErrorKind::NonMonomialRelation, "relation must be a monomial of positive degree");
    rels.push_back(std::move(m));
  }
  std::sort(rels.begin(), rels.end());
  rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
  // keep a minimal generating set
  for (const auto& m : rels) {
    bool redundant = std::any_of(ring->relations_.begin(), ring->relations_.end(),
                                 [&](const RMono& r) { return divides(r.exps, m.exps); });
    if (!redundant) ring->relations_.push_back(m);
  }
  return ring;
}

RMono BaseRing::unit() const { return make_monomial(std::vector<std::uint32_t>(generators_.size(), 0)); }

RMono BaseRing::generator(std::size_t i) const {
  std::vector<std::uint32_t> e(generators_.size(), 0);
  e.at(i) = 1;
  return make_monomial(std::move(e));
}

RMono BaseRing::make_monomial(std::vector<std::uint32_t> exps) const {
  RMono m{std::move(exps), 0};
  for (std::size_t i = 0; i < m.exps.size(); ++i) m.deg += static_cast<int>(m.exps[i]) * generators_[i].degree;
  return m;
}

std::optional<std::size_t> BaseRing::find_generator(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  return std::nullopt;
}

bool BaseRing::is_standard(const RMono& m) const {
  return std::none_of(relations_.begin(), relations_.end(), [&](const RMono& r) { return divides(r.exps, m.exps); });
}

std::optional<RMono> BaseRing::multiply(const RMono& a, const RMono& b) const {
  RMono m{a.exps, a.deg + b.deg};
  for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += b.exps[i];
  if (!is_standard(m)) return std::nullopt;
  return m;
}

std::vector<RMono> BaseRing::basis(int w) const {
  std::vector<RMono> out;
  if (w < 0) return out;
  std::vector<std::uint32_t> exps(generators_.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == generators_.size()) {
      if (left == 0) {
        RMono m = make_monomial(exps);
        if (is_standard(m)) out.push_back(std::move(m));
      }
      return;
    }
    const int d = generators_[i].degree;
    for (int e = 0; e * d <= left; ++e) {
      exps[i] = static_cast<std::uint32_t>(e);
      rec(i + 1, left - e * d);
    }
    exps[i] = 0;
  };
  rec(0, w);
  std::sort(out.begin(), out.end());
  return out;
}

LinearCombination<RMono> BaseRing::normal_form(const LinearCombination<RMono>& raw) const {
  LinearCombination<RMono> out;
  for (const auto& [m, c] : raw)
    if (is_standard(m)) out.add(m, c);
  return out;
}

std::string BaseRing::monomial_to_string(const RMono& m) const {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    parts.push_back(generators_[i].name + (m.exps[i] > 1 ? "^" + std::to_string(m.exps[i]) : ""));
  }
  return detail::join(parts, "*");
}

std::string BaseRing::description() const {
  std::string out = field_.name();
  if (generators_.empty()) return out;
  std::vector<std::string> gens;
  for (const auto& g : generators_) gens.push_back(g.name + ":" + std::to_string(g.degree));
  out += "[" + detail::join(gens, ",") + "]";
  if (!relations_.empty()) {
    std::vector<std::string> rels;
    for (const auto& r : relations_) rels.push_back(monomial_to_string(r));
    out += "/(" + detail::join(rels, ", ") + ")";
  }
  return out;
}

RingElement::RingElement(RingPtr ring, const RMono& m, const Scalar& c) : ring_(std::move(ring)) {
  if (ring_->is_standard(m)) terms_.add(m, c);
}

RingElement RingElement::constant(RingPtr ring, long c) {
  const RMono one = ring->unit();
  const Scalar s = ring->field().from_int(c);
  return RingElement(std::move(ring), one, s);
}

RingElement RingElement::generator(RingPtr ring, std::size_t i) {
  const RMono g = ring->generator(i);
  const Scalar one = ring->field().one();
  return RingElement(std::move(ring), g, one);
}

std::optional<int> RingElement::degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    if (d && *d != m.deg) return std::nullopt;
    d = m.deg;
  }
  return d;
}

void RingElement::check_same_ring(const RingElement& other) const {
  if (ring_ != other.ring_) throw Error(ErrorKind::MixedRings, "ring elements belong to different rings");
}

RingElement RingElement::operator-() const {
  RingElement out = *this;
  out.terms_.scale(-ring_->field().one());
  return out;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  check_same_ring(other);
  terms_ += other.terms_;
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  check_same_ring(other);
  terms_ -= other.terms_;
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  a.check_same_ring(b);
  RingElement out(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      if (auto m = a.ring_->multiply(ma, mb)) out.terms_.add(*m, ca * cb);
  return out;
}

RingElement operator*(const Scalar& s, RingElement a) {
  a.terms_.scale(s);
  return a;
}

std::string RingElement::to_string() const {
  std::vector<std::pair<Scalar, std::string>> parts;
  for (const auto& [m, c] : terms_) parts.emplace_back(c, ring_->monomial_to_string(m));
  return detail::format_sum(parts);
}

RingElement ring_arith(const RingElement& a, const RingElement& b, RingOp op) {
  return op == RingOp::Add ? a + b : a * b;
}

namespace {

// Matrix of multiplication by a homogeneous element from R_{w - deg} to R_w.
Matrix multiplication_block(const RingElement& a, int deg, int w) {
  const auto& ring = *a.ring();
  const auto src = ring.basis(w - deg);
  const auto dst = ring.basis(w);
  Matrix m(ring.field(), dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    RingElement prod = a * RingElement(a.ring(), src[j], ring.field().one());
    for (std::size_t i = 0; i < dst.size(); ++i) m(i, j) = prod.terms().coefficient(dst[i], ring.field().zero());
  }
  return m;
}

}  // namespace

bool principal_ideals_meet_trivially(const RingElement& a, const RingElement& b, int max_degree) {
  if (a.ring() != b.ring()) throw Error(ErrorKind::MixedRings, "ring elements belong to different rings");
  if (a.is_zero() || b.is_zero()) return true;
  auto da = a.degree(), db = b.degree();
  if (!da || !db) throw Error(ErrorKind::InvalidDegree, "ideal intersection check needs homogeneous generators");
  for (int w = 0; w <= max_degree; ++w) {
    Matrix ma = multiplication_block(a, *da, w);
    Matrix mb = multiplication_block(b, *db, w);
    Matrix both(ma.field(), ma.rows(), ma.cols() + mb.cols());
    for (std::size_t r = 0; r < ma.rows(); ++r) {
      for (std::size_t c = 0; c < ma.cols(); ++c) both(r, c) = ma(r, c);
      for (std::size_t c = 0; c < mb.cols(); ++c) both(r, ma.cols() + c) = mb(r, c);
    }
    if (rank(ma) + rank(mb) != rank(both)) return false;
  }
  return true;
}

}  // namespace dglift
