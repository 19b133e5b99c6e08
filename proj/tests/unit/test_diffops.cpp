#include "doctest.h"

#include "cykit/diffops/difference.hpp"
#include "cykit/error.hpp"
#include "cykit/exact/rational.hpp"
#include "cykit/frobenius/frobenius.hpp"

using namespace cykit;
using namespace cykit::exact;
using namespace cykit::diffops;
using opalg::ThetaOperator;

namespace {
// (n+1)^2 u_{n+1} - (11n^2+11n+3) u_n - n^2 u_{n-1} = 0, indexed from n-1.
DifferenceOperator apery2() {
  return DifferenceOperator({Polynomial{1, 2, 1} * Rational(-1), Polynomial{-25, -33, -11}, Polynomial{4, 4, 1}});
}
}  // namespace

TEST_CASE("difference operator basics") {
  const auto R = apery2();
  CHECK(R.order() == 2);
  CHECK(R.leading() == Polynomial{4, 4, 1});
  CHECK(DifferenceOperator({Polynomial{1}, Polynomial{}}).order() == 0);
  CHECK(DifferenceOperator().order() == -1);
  CHECK_THROWS_AS(DifferenceOperator().leading(), DomainError);
}

TEST_CASE("enumeration and conversion round trip") {
  const std::vector<Rational> init{1, 3};
  const auto seq = holonomic_enumerate(apery2(), init, 8);
  CHECK(seq[2] == 19);
  CHECK(seq[3] == 147);
  CHECK(seq[8] == 9793891);
  const auto L = diff_to_de(apery2());
  CHECK(de_to_diff(L) == apery2());
  CHECK(frobenius::analytic_coefficients(L.canonical(), 8) == seq);
  for (const auto& b : boundary_terms(apery2(), seq)) CHECK(b == 0);
  CHECK_THROWS_AS(holonomic_enumerate(apery2(), std::vector<Rational>{1}, 8), PreconditionError);
}

TEST_CASE("enumeration stops at a zero leading coefficient") {
  const DifferenceOperator R({Polynomial{1}, Polynomial{-3, 1}});  // (n-3) a_{n+1} + a_n
  try {
    holonomic_enumerate(R, std::vector<Rational>{1}, 10);
    FAIL("expected EnumerationError");
  } catch (const EnumerationError& e) {
    CHECK(e.step() == 3);
  }
}

TEST_CASE("quadratic signatures") {
  const auto s = quadratic_signature(Polynomial{2, 7, 7});
  CHECK(s.a == 7);
  CHECK(s.discriminant == -7);
  CHECK(s.b_canonical == 7);
  // Shifting n leaves the signature fixed.
  const auto t = quadratic_signature(Polynomial{2, 7, 7}.shifted(3));
  CHECK(t.a == s.a);
  CHECK(t.discriminant == s.discriminant);
  CHECK(t.b_canonical == s.b_canonical);
  CHECK(quadratic_signature(Polynomial{4, 14, 14}) == s);
  CHECK_THROWS_AS(quadratic_signature(Polynomial{1, 1}), DomainError);
}

TEST_CASE("superseeker table") {
  const auto table = superseeker_table();
  CHECK(table.size() == 74);
  int garbled = 0;
  for (const auto& row : table) garbled += row.garbled;
  CHECK(garbled == 1);
  // A leading coefficient (n+2)^4 Q_0(n+1) with Q_0 = 77n^2-209n+142.
  const Polynomial q0{142, -209, 77};
  const DifferenceOperator R({Polynomial{1}, Polynomial{1}, pow(Polynomial{2, 1}, 4) * q0.shifted(1)});
  const auto sig = superseeker_signature(R);
  REQUIRE(sig);
  CHECK(sig->discriminant == -55);
  const auto ids = superseeker_lookup(*sig);
  CHECK(std::ranges::find(ids, "232") != ids.end());
  CHECK_FALSE(superseeker_signature(DifferenceOperator({Polynomial{1}, pow(Polynomial{1, 1}, 4)})));
}
