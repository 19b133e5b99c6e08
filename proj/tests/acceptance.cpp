// Acceptance report: one PASS/FAIL line per criterion, followed by indented
// detail and errata lines. Exit status is 0 once the report is complete;
// `--strict` makes it the number of failing criteria instead.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "cykit/cli/catalog.hpp"
#include "cykit/cli/operator_text.hpp"
#include "cykit/cystruct/cystruct.hpp"
#include "cykit/diffops/difference.hpp"
#include "cykit/exact/log_series.hpp"
#include "cykit/exact/stirling.hpp"
#include "cykit/families/families.hpp"
#include "cykit/frobenius/frobenius.hpp"
#include "cykit/opalg/weyl.hpp"

namespace {

using namespace cykit;
using exact::Integer;
using exact::LogSeries;
using exact::Polynomial;
using exact::PowerSeries;
using exact::Rational;
using exact::RationalFunction;
using opalg::ThetaOperator;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("failed: " + what);
    }
  }
  void note(const std::string& line) { details.push_back(line); }
};

ThetaOperator op(const char* text) { return cli::parse_operator(text); }

const ThetaOperator& catalog_op(std::string_view id) { return *cli::Catalog::builtin().get(id).op; }

std::string join(std::span<const Rational> v, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n && i < v.size(); ++i) s += (i ? ", " : "") + exact::to_string(v[i]);
  return s;
}

PowerSeries analytic(const ThetaOperator& L, int order) {
  return frobenius::frobenius_basis(L, order).solutions[0].part(0).truncated(order);
}

// The sum of seq[n] x^n is annihilated by L through x^n_max.
bool annihilates(const ThetaOperator& L, std::span<const Rational> seq, int n_max) {
  std::vector<Rational> head(seq.begin(), seq.begin() + n_max + 1);
  const auto y = LogSeries::from_series(PowerSeries(head, n_max));
  const auto r = opalg::apply(L, y);
  for (int n = 0; n <= n_max; ++n)
    if (r.coefficient(0, n) != 0) return false;
  return true;
}

Outcome pullback_table() {
  Outcome o;
  const auto& cat = cli::Catalog::builtin();
  // Printed rows that must match verbatim.
  const std::pair<int, const char*> printed[] = {
      {3, "T^4 - 16*x*(128*T^4+256*T^3+304*T^2+176*T+39) + 2^20*x^2*(T+1)^4"},
      {4, "T^4 - 18*x*(324*T^4+648*T^3+765*T^2+441*T+97) + 2^2*3^10*x^2*(T+1)^2*(6*T+5)*(6*T+7)"},
      {5, "T^4 - 12*x*(288*T^4+576*T^3+682*T^2+394*T+87) + 144*x^2*(12*T+11)^2*(12*T+13)^2"},
      {10, "T^4 - 16*x*(2048*T^4+4096*T^3+4800*T^2+2752*T+599) + 2^24*x^2*(T+1)^2*(4*T+3)*(4*T+5)"},
      {14, "T^4 - 48*x*(1152*T^4+2304*T^3+2704*T^2+1552*T+339) + 2^16*3^2*x^2*(6*T+5)^2*(6*T+7)^2"},
  };
  for (const auto& row : families::tilde_rows()) {
    const auto Y = cystruct::yang_pullback(families::hypergeometric_quintic(row.spec));
    const auto closed = families::pullback_closed_form(row.alpha, row.beta, row.spec.c);
    const std::string m = std::to_string(row.index);
    o.require(Y == closed, "row " + m + ": yang_pullback differs from the closed form");
    const auto& entry = cat.get("tilde-" + m);
    o.require(*entry.op == closed, "row " + m + ": catalog operator differs from the closed form");
    if (entry.corrected) o.note("row " + m + " corrected: " + entry.notes);
  }
  for (const auto& [m, text] : printed) {
    o.require(op(text) == cystruct::yang_pullback(families::hypergeometric_quintic(families::tilde_row(m).spec)),
              "row " + std::to_string(m) + ": printed operator differs");
    o.require(!cat.get("tilde-" + std::to_string(m)).corrected, "row " + std::to_string(m) + " is flagged corrected");
  }
  return o;
}

Outcome example_130() {
  Outcome o;
  const auto quintic = op("T^5 - 2*x*(2*T+1)*(14*T^4+28*T^3+28*T^2+14*T+3) + 4*x^2*(T+1)^3*(196*T^2+392*T+255)"
                          " - 1152*x^3*(T+1)^2*(T+2)^2*(2*T+3)");
  o.require(cystruct::cy5_check(quintic), "printed quintic fails U = 0");
  const int M = 20;
  const auto w = frobenius::frobenius_basis(quintic, M + 2);
  const auto oracle = families::sequence_oracle("130", M);
  for (int n = 0; n <= M; ++n) o.require(w.solutions[0].part(0)[n] == oracle[n], "quintic w0 differs from the multinomial sum");

  const auto Y = cystruct::yang_pullback(quintic);
  o.require(Y.order() == 4 && Y.degree() == 6, "pullback order/degree " + std::to_string(Y.order()) + "/" + std::to_string(Y.degree()));
  o.note("pullback degree " + std::to_string(Y.degree()));
  o.require(Y == catalog_op("pullback-130"), "pullback differs from the catalog entry");
  o.note("erratum: " + cli::Catalog::builtin().get("pullback-130").notes);

  const auto Y0 = analytic(Y, M);
  const auto b = cystruct::b_coefficients(opalg::theta_to_monic(quintic));
  // y0 of the C-Y2 quartic with coefficients a_from_b(b).
  const auto a = cystruct::a_from_b(b);
  const auto raw = opalg::monic_to_theta(opalg::MonicOperator({a.a0, a.a1, a.a2, a.a3}));
  const auto rho = frobenius::mum_exponent(raw);
  o.require(rho.has_value(), "underlying quartic has no MUM exponent");
  if (!rho) return o;
  const auto quartic = frobenius::mum_normalize(raw);
  o.note("underlying quartic degree " + std::to_string(quartic.degree()));
  const auto g = exact::gauge_series(b.b4, Rational(-3, 10), M + 4);
  // Both sides are compared as unit series; the leading x-powers are reported.
  o.note("leading power of x^3 y0 exp(-3/10 int b4): " + exact::to_string(Rational(3) + *rho + g.exponent));
  o.require(analytic(quartic, M) * g.unit.truncated(M) == Y0, "Y0 != x^3 y0 exp(-3/10 int b4) through x^20");

  // Y0 = x^{5/2} sqrt(x W(w0, w1)) exp(-1/5 int b4).
  const auto W = exact::log_wronskian(std::vector<LogSeries>{w.solutions[0], w.solutions[1]});
  const auto u = W.shifted(1).part(0).truncated(M);
  const auto g5 = exact::gauge_series(b.b4, Rational(-1, 5), M + 4);
  o.note("leading power of x^{5/2} u^{1/2} exp(-1/5 int b4): " + exact::to_string(Rational(5, 2) + g5.exponent));
  o.require(exact::pow(u, Rational(1, 2)) * g5.unit.truncated(M) == Y0, "Y0 != x^{5/2} u^{1/2} exp(-1/5 int b4)");
  const bool literal = w.solutions[0].part(0).truncated(M) * g.unit.truncated(M) == Y0;
  o.note(std::string("reading y0 as the quintic's w0: ") + (literal ? "holds" : "does not hold"));
  return o;
}

std::vector<ThetaOperator> identity_operators() {
  return {op("T^4"), catalog_op("tilde-3"), catalog_op("sporadic-18"), catalog_op("sporadic-26")};
}

Outcome identity_suite() {
  Outcome o;
  const char* names[] = {"theta^4", "tilde-3", "#18", "#26"};
  int i = 0;
  for (const auto& L : identity_operators()) {
    const auto reports = cystruct::verify_identities(L, 20);
    int passed = 0;
    bool u_square = false, cy2_equiv = false;
    for (const auto& r : reports) {
      if (r.pass) ++passed;
      else o.require(false, std::string(names[i]) + " " + r.id);
      u_square = u_square || (r.id == "U-SQUARE" && r.pass);
      cy2_equiv = cy2_equiv || (r.id == "CY2-EQUIV" && r.pass);
    }
    o.require(reports.size() >= 32, std::string(names[i]) + ": only " + std::to_string(reports.size()) + " identities");
    o.require(u_square && cy2_equiv, std::string(names[i]) + ": U-SQUARE or CY2-EQUIV missing");
    o.note(std::string(names[i]) + ": " + std::to_string(passed) + "/" + std::to_string(reports.size()) + " identities");
    ++i;
  }
  return o;
}

RationalFunction random_rf(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-9, 9), deg(0, 3);
  auto poly = [&](int d) {
    std::vector<Rational> c;
    for (int k = 0; k <= d; ++k) c.emplace_back(coef(rng), 1 + std::abs(coef(rng)));
    return Polynomial(c);
  };
  Polynomial den = poly(deg(rng));
  if (den.is_zero()) den = Polynomial{1};
  return RationalFunction(poly(deg(rng)), den);
}

Outcome round_trips() {
  Outcome o;
  const char* names[] = {"theta^4", "tilde-3", "#18", "#26"};
  int i = 0;
  for (const auto& L : identity_operators()) {
    o.require(cystruct::yang_pullback(cystruct::wronskian_lift(L)) == L, std::string(names[i]) + ": pullback(lift(L)) != L");
    ++i;
  }
  for (const auto& row : families::tilde_rows()) {
    const auto L5 = families::hypergeometric_quintic(row.spec);
    o.require(cystruct::wronskian_lift(cystruct::yang_pullback(L5)) == L5, "row " + std::to_string(row.index) + ": lift(pullback(L5)) != L5");
  }
  std::mt19937 rng(20240611);
  for (int t = 0; t < 20; ++t) {
    const cystruct::ACoefficients a{random_rf(rng), random_rf(rng), random_rf(rng), random_rf(rng)};
    const auto back = cystruct::a_from_b(cystruct::b_from_a(a));
    o.require((back.a3 - a.a3).is_zero() && (back.a2 - a.a2).is_zero() && (back.a1 - a.a1).is_zero() &&
                  (back.a0 - a.a0).is_zero(),
              "a_from_b(b_from_a(a)) != a for tuple " + std::to_string(t));
    const cystruct::BCoefficients b{random_rf(rng), random_rf(rng), random_rf(rng), random_rf(rng)};
    const auto b2 = cystruct::b_from_a(cystruct::a_from_b(b));
    o.require((b2.b4 - b.b4).is_zero() && (b2.b3 - b.b3).is_zero() && (b2.b2 - b.b2).is_zero() &&
                  (b2.b1 - b.b1).is_zero(),
              "b_from_a(a_from_b(b)) != b for tuple " + std::to_string(t));
  }
  o.note("20 random rational-function tuples inverted");
  return o;
}

Outcome hadamard() {
  Outcome o;
  const auto printed = op("T^4 - 144*x*(6*T+1)*(6*T+5)*(72*T^2+72*T+31) + 12^2*186624*x^2*(6*T+1)*(6*T+5)*(6*T+7)*(6*T+11)");
  const auto Dj = families::hadamard_product(families::hyper_second("D"), families::degree_two_second("j"));
  o.require(Dj == printed, "(D)*(j) differs from the printed operator");
  // The termwise product of the two printed sequences.
  const auto oracle = families::sequence_oracle("D*j", 20);
  o.require(analytic(Dj, 20) == PowerSeries(oracle, 20), "(D)*(j) y0 differs from the printed A_n");
  int retained = 0;
  for (const auto& h : families::hyper_seconds())
    for (const auto& s : families::degree_two_seconds()) {
      if (families::hadamard_excluded(h, s)) continue;
      ++retained;
      o.require(cystruct::cy2_check(families::hadamard_product(h, s)), "(" + h.name + ")*(" + s.name + ") fails C-Y2");
    }
  o.require(retained == 38, "retained " + std::to_string(retained) + " products");
  const auto Ch = families::hadamard_product(families::hyper_second("C"), families::degree_two_second("h"));
  const auto k = frobenius::yukawa_coupling(Ch, 15).k_coeffs;
  bool trivial = true;
  for (int m = 0; m < 15 && m < static_cast<int>(k.size()); ++m) trivial = trivial && k[m] == 0;
  o.require(k.size() >= 15 && trivial, "K(q) of (C)*(h) is not 1 through q^15");
  return o;
}

Outcome equivalences() {
  Outcome o;
  const auto& cat = cli::Catalog::builtin();
  int pairs = 0, sign_flipped = 0;
  for (const auto& r : cat.relations()) {
    if (r.kind != "equivalent") continue;
    ++pairs;
    const auto& A = catalog_op(r.left);
    const auto& B = catalog_op(r.right);
    const bool eq = frobenius::equivalent_k(A, B, 12);
    o.require(eq, r.left + " ~ " + r.right + ": K(q) differs");
    if (!eq) {
      // K_A(q) = K_B(-q)?
      const auto ka = frobenius::yukawa_coupling(A, 12).k_coeffs;
      const auto kb = frobenius::yukawa_coupling(B, 12).k_coeffs;
      bool flipped = ka.size() == kb.size();
      for (std::size_t m = 0; flipped && m < ka.size(); ++m) flipped = ka[m] == ((m % 2 == 0) ? -kb[m] : kb[m]);
      if (flipped) ++sign_flipped;
      o.note(r.left + " vs " + r.right + ": k_1 = " + exact::to_string(ka[0]) + " vs " + exact::to_string(kb[0]) +
             (flipped ? " (K_A(q) = K_B(-q) through q^12)" : ""));
    }
  }
  o.require(pairs == 10, std::to_string(pairs) + " pairs in the table");
  o.note(std::to_string(sign_flipped) + "/" + std::to_string(pairs) + " pairs agree only after q -> -q");

  const auto t = frobenius::equivalence_transformation(catalog_op("hadamard2-e-e"), catalog_op("tilde-3"), 6, false);
  const Rational f_printed[] = {480, 383488, 330493952};
  const Rational g_printed[] = {128, 91920, 52555776};
  for (int n = 1; n <= 3; ++n) {
    if (t.f[n] != f_printed[n - 1])
      o.require(false, "f_" + std::to_string(n) + " = " + exact::to_string(t.f[n]) + ", printed " + exact::to_string(f_printed[n - 1]));
    if (t.g[n + 1] != g_printed[n - 1]) {
      if (n == 2 && t.g[3] == 81920)
        o.note("erratum: g_3 printed 91920, computed 81920");
      else
        o.require(false, "g_" + std::to_string(n + 1) + " = " + exact::to_string(t.g[n + 1]) + ", printed " + exact::to_string(g_printed[n - 1]));
    }
  }
  o.note("f = 1 + " + join(t.f.coefficients().subspan(1), 3) + ", g = x + " + join(t.g.coefficients().subspan(2), 3));
  return o;
}

Outcome example_232() {
  Outcome o;
  const Polynomial Q0{142, -209, 77};
  auto lin = [](long k, long m) { return Polynomial{Rational(m), Rational(k)}; };
  const Polynomial tail = lin(2, 1) * lin(2, 1) * lin(3, 1) * lin(3, 2);
  auto recursion = [&](long q1_cubic) {
    return diffops::DifferenceOperator({Rational(-384) * tail * Q0.shifted(3),
                                        -Polynomial{77824, 448272, 1038758, Rational(q1_cubic), 806321, 272085, 37345},
                                        exact::pow(lin(1, 2), 4) * Q0.shifted(2)});
  };
  auto L_text = [](const char* linear) {
    return std::string("T^4*(77*T^2-209*T+142) - x*(37345*T^6+48015*T^5+6071*T^4-11683*T^3-2944*T^2+") + linear +
           "*T+240) - 384*x^2*(2*T+1)^2*(3*T+1)*(3*T+2)*(77*(T+3)^2-209*(T+3)+142)";
  };
  const auto printed_R = recursion(123965);
  const auto printed_L = op(L_text("78").c_str());
  const bool literal = diffops::diff_to_de(printed_R).canonical() == printed_L;
  const auto R = recursion(1239651);
  const auto L = op(L_text("780").c_str());
  o.require(diffops::diff_to_de(R).canonical() == L, "diff_to_de(R) != L with both dropped digits restored");
  if (!literal) o.note("erratum: printed recursion 123965*n^3 is 1239651*n^3 and printed L's 78*T is 780*T");

  const auto seq = families::sequence_oracle("232", 34);
  for (long n = 0; n <= 30; ++n) o.require(R.apply_at(seq, n) == 0, "recursion fails at n = " + std::to_string(n));
  for (const auto& b : diffops::boundary_terms(R, seq)) o.require(b == 0, "nonzero boundary term");
  o.require(annihilates(L, seq, 30), "L does not annihilate the oracle series");
  const bool printed_kills = annihilates(printed_L, seq, 30);
  o.note(std::string("printed L annihilates the oracle: ") + (printed_kills ? "yes" : "no"));

  const auto fit = frobenius::series_annihilator(seq, 4, 4);
  o.require(fit.has_value(), "no annihilator within (4, 4)");
  if (!fit) return o;
  o.require(fit->order() == 4, "fitted factor has order " + std::to_string(fit->order()));
  const auto div = opalg::weyl_right_divide(L, *fit);
  o.require(div.exact && div.remainder.is_zero(), "right division leaves a remainder");
  const auto L2 = op("5^2*T^4 - 5*x*(2617*T^4+4658*T^3+3379*T^2+1050*T+120) - 2^6*3*x^2*(-673*T^4+4871*T^3+10282*T^2+5410*T+860)"
                     " + 2^10*3^2*x^3*(955*T^4+4320*T^3+3477*T^2+1020*T+100) - 2^17*3^3*x^4*(2*T+1)^2*(3*T+1)*(3*T+2)");
  if (*fit == L2)
    o.note("fitted factor equals the printed L2");
  else
    o.note("erratum: fitted factor differs from the printed L2: " + cli::render_operator(*fit));
  return o;
}

Outcome superseeker() {
  Outcome o;
  int checked = 0, errata = 0;
  for (const auto& row : diffops::superseeker_table()) {
    if (row.garbled || !row.q0) continue;
    ++checked;
    const auto sig = diffops::quadratic_signature(*row.q0);
    if (sig.discriminant == row.printed_d) continue;
    if (!row.erratum.empty()) {
      ++errata;
      o.note("erratum: " + row.q0_text + ": printed D = " + row.printed_d.get_str() + ", computed " + sig.discriminant.get_str() + " (" + row.erratum + ")");
    } else {
      o.require(false, row.q0_text + ": printed D = " + row.printed_d.get_str() + ", computed " + sig.discriminant.get_str());
    }
  }
  o.note(std::to_string(checked) + " rows recomputed, " + std::to_string(errata) + " logged errata");
  const auto sig = diffops::superseeker_signature(catalog_op("example-232"));
  o.require(sig.has_value(), "#232 leading coefficient has no quadratic signature");
  if (sig) {
    o.require(sig->discriminant == -55, "#232 discriminant " + sig->discriminant.get_str());
    const auto ids = diffops::superseeker_lookup(*sig);
    o.require(std::ranges::find(ids, "232") != ids.end(), "lookup does not return 232");
  }
  return o;
}

Outcome square_recursion() {
  Outcome o;
  for (const char* name : {"a", "e", "h"}) {
    const auto& s = families::degree_two_second(name);
    const auto R = families::hadamard_square_recursion(s.a, s.b, s.c);
    const auto seq = families::solution_sequence(s, 24);
    std::vector<Rational> sq;
    for (const auto& v : seq) sq.push_back(v * v);
    for (long n = 0; n <= 20; ++n) o.require(R.apply_at(sq, n) == 0, std::string("(") + name + ") fails at n = " + std::to_string(n));
  }
  return o;
}

Outcome degree_three() {
  Outcome o;
  for (const char* id : {"34", "145", "155", "165", "214", "227", "228"}) {
    const auto& entry = cli::Catalog::builtin().get(std::string("deg3-") + id);
    const auto seq = families::sequence_oracle(id, 15);
    o.require(annihilates(*entry.op, seq, 15), std::string("#") + id + ": oracle not annihilated");
    o.require(cystruct::cy2_check(*entry.op), std::string("#") + id + ": fails C-Y2");
    if (entry.corrected) o.note(std::string("#") + id + " corrected: " + entry.notes);
  }
  return o;
}

Outcome corollary() {
  Outcome o;
  const auto& e3 = catalog_op("tilde-3");
  const auto raw = cystruct::exterior_power_operator(e3, {0, 1, 2});
  // The wedge coordinates start at a power of x; shifting theta removes it
  // without changing q or K(q).
  const auto E = frobenius::mum_normalize(raw);
  const auto a = frobenius::yukawa_coupling(e3, 12);
  const auto b = frobenius::yukawa_coupling(E, 12);
  o.require(a.q_over_x.truncated(12) == b.q_over_x.truncated(12), "mirror maps differ");
  o.require(a.k_coeffs == b.k_coeffs, "Yukawa couplings differ");
  o.note("exterior operator order " + std::to_string(E.order()) + ", degree " + std::to_string(E.degree()) +
         " (tilde-3 degree " + std::to_string(e3.degree()) + ")");
  return o;
}

Outcome theorem() {
  Outcome o;
  for (int m : {1, 3, 4}) {
    const auto& row = families::tilde_row(m);
    const auto r = families::theorem_solution_check(row.alpha, row.beta, row.spec.c, 12);
    o.require(r.pass, "tilde-" + std::to_string(m) + ": (1 - cx) y0^2 differs from the double sum");
    const auto w = frobenius::frobenius_basis(families::hypergeometric_quintic(row.spec), 12);
    o.require(w.solutions[1].part(0).truncated(12) == families::quintic_w1_closed_form(row.spec, 12),
              "tilde-" + std::to_string(m) + ": w1 differs from the closed form");
  }
  return o;
}

Outcome properties() {
  Outcome o;
  const auto& cat = cli::Catalog::builtin();
  int entries = 0;
  Integer worst = 1;
  for (const auto& e : cat.entries()) {
    if (!e.op || e.excluded || e.op->order() != 4 || e.op->degree() != 2 || !frobenius::mum_check(*e.op)) continue;
    const auto m = frobenius::yukawa_coupling(*e.op, 10);
    ++entries;
    if (m.normalizer > worst) worst = m.normalizer;
    o.require(m.normalizer <= 1000000, e.id + ": instanton normalizer " + m.normalizer.get_str());
  }
  o.note(std::to_string(entries) + " degree-2 entries, largest normalizer " + worst.get_str());

  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) {
      Rational sum = 0;
      for (int j = k; j <= n; ++j)
        sum += exact::stirling(exact::StirlingKind::first, n, j) * exact::stirling(exact::StirlingKind::second, j, k);
      o.require(sum == (n == k ? 1 : 0), "Stirling product at (" + std::to_string(n) + ", " + std::to_string(k) + ")");
    }

  int round = 0;
  for (const auto& e : cat.entries()) {
    if (!e.op) continue;
    ++round;
    o.require(cli::parse_operator(cli::render_operator(*e.op)) == *e.op, e.id + ": theta-style round trip");
    o.require(cli::parse_operator(cli::render_operator(*e.op, cli::RenderStyle::machine)) == *e.op, e.id + ": machine round trip");
  }
  const std::string text = cli::to_text(cat);
  o.require(cli::to_text(cli::Catalog::parse(text)) == text, "catalog text round trip");
  o.note(std::to_string(round) + " catalog operators round-tripped");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"fourteen-row pullback reproduction", pullback_table},
      {"example #130 pullback and Y0", example_130},
      {"Wronskian identity suite", identity_suite},
      {"round trips", round_trips},
      {"Hadamard products", hadamard},
      {"pullback/Hadamard equivalences", equivalences},
      {"#232 pipeline", example_232},
      {"Superseeker discriminants", superseeker},
      {"Hadamard-square recursion", square_recursion},
      {"degree-3 catalog", degree_three},
      {"exterior power corollary", corollary},
      {"theorem solution identity", theorem},
      {"property suites", properties},
  };
  int failures = 0, index = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.details.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << index << " " << name << " (" << std::fixed;
    std::cout.precision(1);
    std::cout << secs << "s)\n";
    for (const auto& d : o.details) std::cout << "    " << d << "\n";
    std::cout.flush();
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (index - failures) << "/" << index << " criteria pass (" << total << "s)\n";
  return strict ? failures : 0;
}
