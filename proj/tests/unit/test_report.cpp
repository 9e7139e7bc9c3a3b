#include <doctest.h>

#include "dglift/error.hpp"
#include "dglift/report.hpp"

using namespace dglift;

namespace {

const char* kProblem =
    "ring R = QQ[x:1,y:1]/(x*y, x^2)\n"
    "algebra B = R<X:1, Y:2 | dX = x, dY = X*y>\n"
    "module M over B = <u:0, up:4 | dup = u*Y*X*x>\n"
    "module N over B = <e:0, ep:4 | dep = e*Y*X*y>\n";

ReportDocument check_lift_report() {
  const auto p = parse_problem(kProblem);
  ReportDocument doc;
  doc.command = "check-lift";
  doc.problem = print_problem(p);
  for (const auto& m : p.modules)
    doc.results.push_back(describe_report(m.name, *m.module, check_naive_lift(*m.module), true));
  doc.timing_ms = 3;
  return doc;
}

}  // namespace

TEST_SUITE("cli_format") {
  TEST_CASE("report contents") {
    const auto doc = check_lift_report();
    REQUIRE(doc.results.size() == 2);
    const auto& m = doc.results[0];
    CHECK(m.decision == "NOT_LIFTABLE");
    CHECK(m.method == "rank2-corollary");
    REQUIRE(m.certificate);
    CHECK(m.certificate->verified);
    CHECK(m.obstruction[1].value == "u⊗σ((X*Y)^o⊗1)·x");
    const auto& n = doc.results[1];
    CHECK(n.decision == "LIFTABLE");
    REQUIRE(n.witness);
    CHECK((*n.witness)[1].value == "e⊗σ((Y^(2))^o⊗1)");
    CHECK(n.witness_verified == true);
  }

  TEST_CASE("JSON shape and round trip") {
    const auto doc = check_lift_report();
    const auto json = emit_report(doc, Format::Json);
    CHECK(json.find("\"decision\": \"LIFTABLE\",\n      \"method\": \"rank2-corollary\"") != std::string::npos);
    CHECK(json.find("\"version\"") < json.find("\"problem\""));
    CHECK(json.find("\"problem\"") < json.find("\"results\""));
    CHECK(json.find("\"results\"") < json.find("\"timing_ms\""));
    CHECK(parse_report(json) == doc);
    CHECK(emit_report(parse_report(json), Format::Json) == json);
    CHECK(emit_report(check_lift_report(), Format::Json) == json);
  }

  TEST_CASE("text format uses pair notation") {
    const auto text = emit_report(check_lift_report(), Format::Text);
    CHECK(text.find("-u⊗1^o⊗(X*Y)·x + u⊗(X*Y)^o⊗1·x") != std::string::npos);
    CHECK(text.find("module N: LIFTABLE (rank2-corollary)") != std::string::npos);

    ReportDocument d;
    d.command = "delta";
    const auto p = parse_problem(kProblem);
    d.delta = describe_delta("B", parse_algebra_element(p.algebras[0].algebra, "X*Y*x"));
    CHECK(emit_report(d, Format::Text).find("= -1^o⊗(X*Y)·x + (X*Y)^o⊗1·x") != std::string::npos);
  }

  TEST_CASE("malformed reports") {
    for (const char* bad : {"", "{", "{\"version\": 1}", "[]"}) {
      try {
        parse_report(bad);
        FAIL("parsed " << bad);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SyntaxError);
      }
    }
  }
}
