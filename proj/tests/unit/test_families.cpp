#include "doctest.h"

#include "cykit/cystruct/cystruct.hpp"
#include "cykit/error.hpp"
#include "cykit/exact/rational.hpp"
#include "cykit/families/families.hpp"
#include "cykit/frobenius/frobenius.hpp"

using namespace cykit;
using namespace cykit::exact;
using namespace cykit::families;

namespace {
Integer sum_binomials(int n, auto term) {
  Integer s = 0;
  for (int k = 0; k <= n; ++k) s += term(n, k);
  return s;
}
}  // namespace

TEST_CASE("second-order sequences against binomial sums") {
  const auto franel = solution_sequence(degree_two_second("a"), 12);
  const auto apery2 = solution_sequence(degree_two_second("(b)"), 12);
  const auto c_seq = solution_sequence(degree_two_second("c"), 12);
  const auto central = solution_sequence(hyper_second("A"), 12);
  for (int n = 0; n <= 12; ++n) {
    CHECK(franel[n] == Rational(sum_binomials(n, [](int m, int k) {
            Integer b = binomial(m, k);
            return Integer(b * b * b);
          })));
    CHECK(apery2[n] == Rational(sum_binomials(n, [](int m, int k) {
            Integer b = binomial(m, k);
            return Integer(b * b * binomial(m + k, k));
          })));
    CHECK(c_seq[n] == Rational(sum_binomials(n, [](int m, int k) {
            Integer b = binomial(m, k);
            return Integer(b * b * binomial(2 * k, k));
          })));
    const Integer c2 = binomial(2 * n, n);
    CHECK(central[n] == Rational(c2 * c2));
  }
  CHECK_THROWS_AS(degree_two_second("z"), NotFoundError);
  CHECK_THROWS_AS(hyper_second("E"), NotFoundError);
}

TEST_CASE("Hadamard product closed formula matches termwise products") {
  for (const char* s : {"a", "e", "j"}) {
    const auto& h = hyper_second("B");
    const auto& d = degree_two_second(s);
    const auto L = hadamard_product(h, d);
    const auto a = solution_sequence(h, 10);
    const auto b = solution_sequence(d, 10);
    const auto y0 = frobenius::analytic_coefficients(L, 10);
    for (int n = 0; n <= 10; ++n) CHECK(y0[n] == a[n] * b[n]);
  }
  CHECK(hadamard_excluded(hyper_second("C"), degree_two_second("h")));
  CHECK(hadamard_excluded(hyper_second("C"), degree_two_second("e")));
  CHECK_FALSE(hadamard_excluded(hyper_second("D"), degree_two_second("j")));
}

TEST_CASE("binomial lifts are C-Y2") {
  REQUIRE(binom_lift_rows().size() == 8);
  for (const auto& row : binom_lift_rows()) CHECK_MESSAGE(cystruct::cy2_check(binom_lift_third(row.p, row.c)), row.name);
}

TEST_CASE("hypergeometric quintic") {
  CHECK(tilde_rows().size() == 14);
  const auto& row = tilde_row(3);
  CHECK(row.spec.alpha() == row.alpha);
  CHECK(row.spec.beta() == row.beta);
  const auto L = hypergeometric_quintic(row.spec);
  CHECK(L.order() == 5);
  CHECK(cystruct::cy5_check(L));
  const auto back = HypergeometricQuinticSpec::from_alpha_beta(row.alpha, row.beta, row.spec.c);
  CHECK(hypergeometric_quintic(back) == L);
  CHECK_THROWS_AS(hypergeometric_quintic({Rational(1, 4), Rational(1, 3), 0}), PreconditionError);
  CHECK_THROWS_AS(tilde_row(15), NotFoundError);
}

TEST_CASE("pullback closed form agrees with the pullback for every row") {
  for (const auto& row : tilde_rows())
    CHECK(cystruct::yang_pullback(hypergeometric_quintic(row.spec)) ==
          pullback_closed_form(row.alpha, row.beta, row.spec.c));
}

TEST_CASE("theorem identity and w1 closed form") {
  const auto& row = tilde_row(4);
  CHECK(theorem_solution_check(row.alpha, row.beta, row.spec.c, 8).pass);
  const auto w = frobenius::frobenius_basis(hypergeometric_quintic(row.spec), 8);
  CHECK(w.solutions[1].part(0).truncated(8) == quintic_w1_closed_form(row.spec, 8));
}

TEST_CASE("square recursion") {
  const auto& s = degree_two_second("c");
  const auto R = hadamard_square_recursion(s.a, s.b, s.c);
  CHECK(R.order() == 3);
  const auto seq = solution_sequence(s, 14);
  std::vector<Rational> sq;
  for (const auto& v : seq) sq.push_back(v * v);
  for (long n = 0; n <= 10; ++n) CHECK(R.apply_at(sq, n) == 0);
}

TEST_CASE("sequence oracles") {
  CHECK(sequence_oracle_names().size() == 10);
  CHECK(sequence_oracle("34", 3).size() == 4);
  CHECK_THROWS_AS(sequence_oracle("999", 3), NotFoundError);
}
