#include "doctest.h"

#include "cykit/cli/catalog.hpp"
#include "cykit/cli/operator_text.hpp"
#include "cykit/error.hpp"

using namespace cykit;
using namespace cykit::cli;
using exact::Polynomial;
using opalg::ThetaOperator;

TEST_CASE("parse canonicalizes") {
  const auto L = parse_operator("2*T^2 - 2*x*(T+1)");
  CHECK(L == ThetaOperator({Polynomial{0, 0, 1}, Polynomial{-1, -1}}));
  // T*x is x*(T+1).
  CHECK(parse_operator("T^2 - T*x") == parse_operator("T^2 - x*(T+1)"));
  CHECK(parse_operator("T^2/3 - x/3") == parse_operator("T^2 - x"));
  CHECK(parse_operator("-(T^2) + x") == parse_operator("T^2 - x"));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_operator("T^4 x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_operator("T^4 - (x"), ParseError);
  CHECK_THROWS_AS(parse_operator("T/x"), ParseError);
  CHECK_THROWS_AS(parse_operator("T^"), ParseError);
  CHECK_THROWS_AS(parse_operator("T - T"), ParseError);
  CHECK_THROWS_AS(parse_operator("T^99999"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("n + x"), ParseError);
}

TEST_CASE("render round trips") {
  for (const char* text : {"T^4 - 5*x*(5*T+1)*(5*T+2)*(5*T+3)*(5*T+4)", "T^2 - x", "T^3 + 7*x^5*(T+1)^2",
                           "(77*T^6-209*T^5+142*T^4) - x*(37345*T^6+780*T+240)"}) {
    const auto L = parse_operator(text);
    CHECK(parse_operator(render_operator(L)) == L);
    CHECK(parse_operator(render_operator(L, RenderStyle::machine)) == L);
  }
  CHECK(render_operator(parse_operator("T^2 - x")) == "T^2 - x");
  CHECK(render_operator(parse_operator("T^2 - x"), RenderStyle::machine) == "CYOP 1\norder 2 degree 1\n0 0 1\n-1 0 0\n");
}

TEST_CASE("polynomial parsing keeps raw coefficients") {
  CHECK(parse_polynomial("2*n^2 + 4") == Polynomial{4, 0, 2});
  CHECK(parse_polynomial("(T+1)^2", 'T') == Polynomial{1, 2, 1});
}

TEST_CASE("catalog text format") {
  const char* text =
      "CYCAT 1\n"
      "entry demo\n"
      "aliases d1 d2\n"
      "source a test entry\n"
      "tags sporadic\n"
      "operator\n"
      "CYOP 1\n"
      "order 2 degree 1\n"
      "0 0 1\n"
      "-1 0 0\n"
      "end\n"
      "relation grid demo d1 | same entry\n";
  const auto cat = Catalog::parse(text);
  const auto& e = cat.get("d2");
  CHECK(e.id == "demo");
  CHECK(e.has_tag("sporadic"));
  REQUIRE(e.op);
  CHECK(*e.op == parse_operator("T^2 - x"));
  CHECK(cat.relations().size() == 1);
  CHECK(to_text(Catalog::parse(to_text(cat))) == to_text(cat));
  CHECK_THROWS_AS(cat.get("demp"), NotFoundError);
  CHECK(cat.find("nothing") == nullptr);
  CHECK_THROWS_AS(Catalog::parse("CYCAT 2\n"), ParseError);
  CHECK_THROWS_AS(Catalog::parse("CYCAT 1\nentry a\nend\nentry a\nend\n"), Error);
}

TEST_CASE("builtin catalog") {
  const auto& cat = Catalog::builtin();
  CHECK(cat.get("e3").id == "tilde-3");
  CHECK(cat.get("232").has_tag("non-mum"));
  CHECK(cat.get("hadamard-D-j").op.has_value());
  CHECK(cat.get("hadamard-C-h").excluded);
  CHECK(cat.get("superseeker-row-01").q0.has_value());
}
