#include <doctest.h>

#include "dglift/dsl.hpp"
#include "fixtures.hpp"

using namespace dglift;
using fixtures::Names;

namespace {

const char* kLiftable =
    "ring R = QQ[x:1,y:1]/(x*y)\n"
    "algebra B = R<X:1, Y:2 | dX = x, dY = X*y>\n"
    "module N over B = <e:0, ep:4 | de = 0, dep = e*X*Y*y>\n";

Error parse_error(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("parsed without error: " << text);
  return Error(ErrorKind::UsageError, "");
}

}  // namespace

TEST_SUITE("cli_format") {
  TEST_CASE("the liftable example parses to the programmatic construction") {
    const auto p = parse_problem(kLiftable);
    REQUIRE(p.modules.size() == 1);
    const auto& n = *p.modules[0].module;
    const Names b(p.algebras[0].algebra);
    CHECK(n.basis()[1].bidegree() == Bidegree{4, 4});
    CHECK(n.structure(0, 1) == b.X * b.Y * b.y);
    CHECK(p.rings[0].ring->description() == "QQ[x:1,y:1]/(x*y)");
    CHECK(b.alg->variables()[1].wdeg == 2);
  }

  TEST_CASE("the non-liftable module") {
    const auto p = parse_problem(
        "ring R = QQ[x:1,y:1]/(x*y, x^2)\n"
        "algebra B = R<X:1, Y:2 | dX = x, dY = X*y>\n"
        "module M over B = <u:0, up:4 | du = 0, dup = u*X*Y*x>\n");
    const Names b(p.algebras[0].algebra);
    CHECK(p.find_module("M")->module->structure(0, 1) == b.X * b.Y * b.x);
  }

  TEST_CASE("expressions") {
    const auto p = parse_problem(kLiftable);
    const Names b(p.algebras[0].algebra);
    CHECK(parse_algebra_element(b.alg, "Y^(2)") == b.Yn(2));
    CHECK(parse_algebra_element(b.alg, "Y^2") == b.s(2) * b.Yn(2));
    CHECK(parse_algebra_element(b.alg, "Y*X*y") == b.X * b.Y * b.y);
    CHECK(parse_algebra_element(b.alg, "-(x + y)*X") == -(b.X * b.x) - b.X * b.y);
    CHECK(parse_algebra_element(b.alg, "1/2*x - 1/2*x").is_zero());
    CHECK(parse_algebra_element(b.alg, "X*X + x*y").is_zero());
  }

  TEST_CASE("print and parse round trip") {
    const std::vector<std::string> inputs = {
        kLiftable,
        "ring R = QQ\nalgebra B = R<X:1, Y:2:1, T:4 | dT = X*Y>\n",
        "# comment\nring S = FF(5)[x:1,y:1]/(x^2, y^2)\n"
        "algebra A = S<X:1, Z:1, W:2 | dX = x, dZ = y,\n   dW = x*Z - y*X>\n"
        "module P over A = <p:0, q:3, s:1 | dq = 2*p*W*x*y, ds = 0>\n",
    };
    for (const auto& text : inputs) {
      const auto printed = print_problem(parse_problem(text));
      CAPTURE(printed);
      CHECK(print_problem(parse_problem(printed)) == printed);
    }
    CHECK(print_problem(parse_problem(kLiftable)) ==
          "ring R = QQ[x:1,y:1]/(x*y)\n"
          "algebra B = R<X:1:1, Y:2:2 | dX = x, dY = X*y>\n"
          "module N over B = <e:0:0, ep:4:4 | dep = e*X*Y*y>\n");
  }

  TEST_CASE("errors carry the line") {
    auto e = parse_error("ring R = QQ[x:1,y:1]/(x*y)\nalgebra B = R<X:1, Z:1 | dX = x, dZ = W>\n");
    CHECK(e.kind() == ErrorKind::UndeclaredName);
    CHECK(e.line() == 2);

    e = parse_error("ring R = QQ[x:1,y:1]/(x*y)\n\nalgebra B = R<X:1 | dX = x +>\n");
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("column") != std::string::npos);

    e = parse_error("ring R = QQ\nring R = QQ\n");
    CHECK(e.kind() == ErrorKind::DuplicateName);
    CHECK(e.line() == 2);

    e = parse_error(
        "ring R = QQ[x:1,y:1]/(x*y)\n"
        "algebra B = R<X:1, Y:2 | dX = x, dY = X*y>\n"
        "module M over B = <u:0, up:4 | dup = u*X*Y*x>\n");
    CHECK(e.kind() == ErrorKind::DifferentialSquareNonzero);
    CHECK(e.line() == 3);

    e = parse_error("ring R = QQ[x:1,y:1]/(x*y)\nalgebra B = R<X:1, Y:2 | dX = x, dY = X*x>\n");
    CHECK(e.kind() == ErrorKind::CycleViolation);
    CHECK(e.line() == 2);

    e = parse_error("ring R = QQ[x:1,y:1]/(x*y + x^2)\n");
    CHECK(e.kind() == ErrorKind::NonMonomialRelation);
    CHECK(e.line() == 1);

    e = parse_error("module N over C = <e:0>\n");
    CHECK(e.kind() == ErrorKind::UndeclaredName);
  }

  TEST_CASE("ring descriptions") {
    CHECK(parse_ring("QQ")->is_field());
    CHECK(parse_ring("FF(7)")->field().characteristic() == 7);
    CHECK(parse_ring("QQ[x:1,y:2]/(x^2*y)")->description() == "QQ[x:1,y:2]/(x^2*y)");
    CHECK_THROWS_AS(parse_ring("FF(8)"), Error);
  }
}
