#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace dglift;
using fixtures::qxy;

namespace {

RingElement gen(const RingPtr& r, std::size_t i) { return RingElement::generator(r, i); }

// Degree-w exponent vectors avoiding every relation, counted directly.
std::size_t brute_force_dim(const std::vector<int>& weights, const std::vector<std::vector<std::uint32_t>>& rels,
                            int w) {
  std::size_t count = 0;
  std::vector<std::uint32_t> e(weights.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == weights.size()) {
      if (left != 0) return;
      for (const auto& rel : rels) {
        bool divides = true;
        for (std::size_t k = 0; k < e.size(); ++k) divides = divides && rel[k] <= e[k];
        if (divides) return;
      }
      ++count;
      return;
    }
    for (int k = 0; k * weights[i] <= left; ++k) {
      e[i] = static_cast<std::uint32_t>(k);
      self(self, i + 1, left - k * weights[i]);
    }
    e[i] = 0;
  };
  rec(rec, 0, w);
  return count;
}

RingElement random_element(const RingPtr& r, std::mt19937_64& rng, int w) {
  RingElement out(r);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (const auto& m : r->basis(w)) out += RingElement(r, m, r->field().from_int(coeff(rng)));
  return out;
}

}  // namespace

TEST_SUITE("coefficients") {
  TEST_CASE("graded pieces of Q[x,y]/(xy)") {
    const auto r = qxy();
    CHECK(r->basis(0).size() == 1);
    CHECK(r->basis(0)[0].is_one());
    const auto b2 = r->basis(2);
    REQUIRE(b2.size() == 2);
    CHECK(r->monomial_to_string(b2[0]) == "x^2");
    CHECK(r->monomial_to_string(b2[1]) == "y^2");
    const auto b3 = r->basis(3);
    REQUIRE(b3.size() == 2);
    CHECK(r->monomial_to_string(b3[0]) == "x^3");
    CHECK(r->monomial_to_string(b3[1]) == "y^3");
  }

  TEST_CASE("the field case") {
    const auto q = build_base_ring(RingSpec{});
    CHECK(q->is_field());
    CHECK(q->basis(0).size() == 1);
    CHECK(q->basis(1).empty());
    CHECK(q->description() == "QQ");
  }

  TEST_CASE("arithmetic") {
    const auto r = qxy();
    const auto x = gen(r, 0), y = gen(r, 1);
    CHECK((x * y).is_zero());
    CHECK((x * x).to_string() == "x^2");
    CHECK((x + y) * (x + y) == x * x + y * y);
    CHECK(ring_arith(x, y, RingOp::Mul).is_zero());
    CHECK(ring_arith(x, y, RingOp::Add) == x + y);
  }

  TEST_CASE("xR and yR meet trivially") {
    const auto r = qxy();
    CHECK(principal_ideals_meet_trivially(gen(r, 0), gen(r, 1), 6));
    // Monomial oracle: xR ∩ yR is spanned by the standard monomials divisible by xy.
    const auto f = fixtures::free_qxy();
    CHECK_FALSE(principal_ideals_meet_trivially(gen(f, 0), gen(f, 1), 6));
    RingSpec s;
    s.generators = {{"x", 1}, {"y", 1}};
    s.relations = {{2, 1}};
    const auto r2 = build_base_ring(s);
    CHECK_FALSE(principal_ideals_meet_trivially(gen(r2, 0), gen(r2, 1), 6));
    CHECK(principal_ideals_meet_trivially(gen(r2, 0), gen(r2, 1), 1));
  }

  TEST_CASE("construction errors") {
    RingSpec dup;
    dup.generators = {{"x", 1}, {"x", 1}};
    CHECK_THROWS_AS(build_base_ring(dup), Error);
    try {
      build_base_ring(dup);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DuplicateGenerator);
    }
    RingSpec bad;
    bad.generators = {{"x", 0}};
    try {
      build_base_ring(bad);
      FAIL("accepted a degree-0 generator");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidDegree);
    }
    CHECK_THROWS_AS(GroundField::prime(6), Error);
  }

  TEST_CASE("relations are minimised") {
    RingSpec s;
    s.generators = {{"x", 1}, {"y", 1}};
    s.relations = {{2, 1}, {1, 1}, {1, 1}};
    const auto r = build_base_ring(s);
    CHECK(r->relations().size() == 1);
    CHECK(r->description() == "QQ[x:1,y:1]/(x*y)");
  }

  TEST_CASE("prime field arithmetic") {
    const auto f = GroundField::prime(5);
    CHECK(f.from_int(3) * f.from_int(2) == f.one());
    CHECK(f.from_int(-1) == f.from_int(4));
    CHECK((f.from_int(2).inverse() * f.from_int(2)).is_one());
    CHECK_THROWS_AS(f.from_fraction(1, 5), Error);
    const auto q = GroundField::rationals();
    CHECK((q.from_fraction(1, 3) + q.from_fraction(1, 6)).to_string() == "1/2");
  }

  TEST_CASE("dimensions agree with brute-force enumeration") {
    const std::vector<std::pair<std::vector<int>, std::vector<std::vector<std::uint32_t>>>> rings = {
        {{1, 1}, {{1, 1}}},
        {{1, 1}, {{1, 1}, {2, 0}}},
        {{1, 2, 3}, {{1, 1, 0}, {0, 2, 1}, {3, 0, 0}}},
        {{2, 3}, {}},
    };
    for (const auto& [weights, rels] : rings) {
      RingSpec s;
      for (std::size_t i = 0; i < weights.size(); ++i) s.generators.push_back({"g" + std::to_string(i), weights[i]});
      s.relations = rels;
      const auto r = build_base_ring(s);
      for (int w = 0; w <= 9; ++w) {
        CAPTURE(w);
        CHECK(r->basis(w).size() == brute_force_dim(weights, rels, w));
        for (const auto& m : r->basis(w)) CHECK(r->is_standard(m));
      }
    }
  }

  TEST_CASE("normal form and ring axioms on random elements") {
    RingSpec s;
    s.generators = {{"x", 1}, {"y", 1}, {"z", 2}};
    s.relations = {{1, 1, 0}, {0, 2, 1}, {3, 0, 0}};
    const auto r = build_base_ring(s);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> deg(0, 4);
    for (int i = 0; i < 100; ++i) {
      const auto a = random_element(r, rng, deg(rng));
      const auto b = random_element(r, rng, deg(rng));
      const auto c = random_element(r, rng, deg(rng));
      CHECK(r->normal_form(a.terms()) == a.terms());
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
    }
  }
}
