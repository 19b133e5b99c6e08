#include "doctest.h"

#include "cykit/cli/operator_text.hpp"
#include "cykit/cystruct/cystruct.hpp"
#include "cykit/error.hpp"
#include "cykit/frobenius/frobenius.hpp"

using namespace cykit;
using namespace cykit::cystruct;
using cli::parse_operator;

TEST_CASE("C-Y2 condition") {
  CHECK(cy2_check(parse_operator("T^4 - 5*x*(5*T+1)*(5*T+2)*(5*T+3)*(5*T+4)")));
  CHECK(cy2_check(parse_operator("T^4 - 16*x*(128*T^4+256*T^3+304*T^2+176*T+39) + 2^20*x^2*(T+1)^4")));
  // Symmetric P_1 is required; a shifted factor breaks it.
  CHECK_FALSE(cy2_check(parse_operator("T^4 - x*(T+1)^3*(T+2)")));
  CHECK_THROWS_AS(cy2_check(parse_operator("T^3 - x")), PreconditionError);
}

TEST_CASE("lift and pullback invert each other") {
  const auto L = parse_operator("T^4 - 4*x*(2*T+1)^2*(3*T^2+3*T+1) - 16*x^2*(2*T+1)*(2*T+3)*(4*T+3)*(4*T+5)");
  const auto L5 = wronskian_lift(L);
  CHECK(L5.order() == 5);
  CHECK(cy5_check(L5));
  CHECK(yang_pullback(L5) == L);
  CHECK(yang_pullback_gauge(L5) == L);
}

TEST_CASE("fifth-order condition U") {
  const auto hyper = parse_operator("2^10*T^5 - 2^10*x*(2*T+1)*(3*T+1)*(3*T+2)*(4*T+1)*(4*T+3)");
  // a_2 + a_3 = 1 and a_4 + a_5 = 1 around a_1 = 1/2 give U = 0.
  CHECK(cy5_check(hyper));
  CHECK_FALSE(cy5_check(parse_operator("T^5 - x*(2*T+1)*(T+1)^4")));
}

TEST_CASE("a and b coefficients invert") {
  const auto L = parse_operator("T^4 - x*(65*T^4+130*T^3+105*T^2+40*T+6) + 4*x^2*(T+1)^2*(4*T+3)*(4*T+5)");
  const auto a = a_coefficients(opalg::theta_to_monic(L));
  const auto back = a_from_b(b_from_a(a));
  CHECK((back.a3 - a.a3).is_zero());
  CHECK((back.a2 - a.a2).is_zero());
  CHECK((back.a1 - a.a1).is_zero());
  CHECK((back.a0 - a.a0).is_zero());
  CHECK(u_condition(b_from_a(a)).is_zero());
}

TEST_CASE("identities of a C-Y2 operator") {
  const auto reports = verify_identities(parse_operator("T^4 - 5*x*(5*T+1)*(5*T+2)*(5*T+3)*(5*T+4)"), 10);
  CHECK(reports.size() >= 32);
  for (const auto& r : reports) CHECK_MESSAGE(r.pass, r.id);
}

TEST_CASE("identities report failures for a non-C-Y2 operator") {
  const auto reports = verify_identities(parse_operator("T^4 - x*(T+1)^3*(T+2)"), 8);
  bool any_fail = false;
  for (const auto& r : reports)
    if (!r.pass) {
      any_fail = true;
      CHECK(r.residual_valuation.has_value());
    }
  CHECK(any_fail);
}

TEST_CASE("exterior square of the quintic") {
  const auto L = parse_operator("T^4 - 5*x*(5*T+1)*(5*T+2)*(5*T+3)*(5*T+4)");
  const auto E = exterior_square(L);
  CHECK(E.order() == 5);
  const auto P = exterior_power_operator(L);
  CHECK(P.order() == 4);
}
