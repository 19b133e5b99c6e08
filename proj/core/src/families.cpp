#include "cykit/families/families.hpp"

#include <algorithm>

#include "cykit/error.hpp"
#include "cykit/frobenius/frobenius.hpp"

namespace cykit::families {

namespace {

// (k theta + m)
Polynomial lin(long k, long m) { return Polynomial{Rational(m), Rational(k)}; }

std::string_view strip_parens(std::string_view name) {
  if (name.size() >= 2 && name.front() == '(' && name.back() == ')') return name.substr(1, name.size() - 2);
  return name;
}

Rational harmonic(int k) {
  Rational h = 0;
  for (int j = 1; j <= k; ++j) h += Rational(1, j);
  return h;
}

// psi(k + a) - psi(a)
Rational digamma_difference(const Rational& a, int k) {
  Rational s = 0;
  for (int j = 0; j < k; ++j) s += 1 / (a + j);
  return s;
}

// prod_j (a_j)_n / n!^5
Rational hypergeometric_term(std::span<const Rational> a, int n) {
  Rational t = 1;
  for (const auto& aj : a) t *= exact::pochhammer(aj, n) / Rational(exact::factorial(static_cast<unsigned>(n)));
  return t;
}

// -5 H_k + sum_j (psi(k + a_j) - psi(a_j))
Rational log_derivative(std::span<const Rational> a, int k) {
  Rational s = -5 * harmonic(k);
  for (const auto& aj : a) s += digamma_difference(aj, k);
  return s;
}

}  // namespace

Polynomial DegreeTwoSecond::p() const { return Polynomial{b, a, a}; }

std::span<const HyperSecond> hyper_seconds() {
  static const std::vector<HyperSecond> table = {
      {"A", 4 * lin(2, 1) * lin(2, 1)},
      {"B", 3 * lin(3, 1) * lin(3, 2)},
      {"C", 4 * lin(4, 1) * lin(4, 3)},
      {"D", 12 * lin(6, 1) * lin(6, 5)},
  };
  return table;
}

std::span<const DegreeTwoSecond> degree_two_seconds() {
  static const std::vector<DegreeTwoSecond> table = {
      {"a", 7, 2, 8},          {"b", 11, 3, 1},       {"c", 10, 3, -9},      {"d", 12, 4, -32},
      {"e", 32, 12, -256},     {"f", 9, 3, -27},      {"g", 17, 6, -72},     {"h", 54, 21, -729},
      {"i", 128, 52, -4096},   {"j", 864, 372, -186624},
  };
  return table;
}

const HyperSecond& hyper_second(std::string_view name) {
  name = strip_parens(name);
  for (const auto& h : hyper_seconds())
    if (h.name == name) return h;
  throw NotFoundError("unknown hypergeometric second-order equation '" + std::string(name) + "' (expected A-D)");
}

const DegreeTwoSecond& degree_two_second(std::string_view name) {
  name = strip_parens(name);
  for (const auto& s : degree_two_seconds())
    if (s.name == name) return s;
  throw NotFoundError("unknown second-degree equation '" + std::string(name) + "' (expected a-j)");
}

ThetaOperator second_order_operator(const HyperSecond& h) {
  return ThetaOperator({Polynomial::monomial(1, 2), -h.q});
}

ThetaOperator second_order_operator(const DegreeTwoSecond& s) {
  const Polynomial t1 = lin(1, 1);
  return ThetaOperator({Polynomial::monomial(1, 2), -s.p(), -s.c * t1 * t1});
}

std::vector<Rational> solution_sequence(const HyperSecond& h, int n_max) {
  std::vector<Rational> out{1};
  for (int n = 1; n <= n_max; ++n) out.push_back(h.q(Rational(n - 1)) * out.back() / (n * n));
  return out;
}

std::vector<Rational> solution_sequence(const DegreeTwoSecond& s, int n_max) {
  // n^2 E_n = P(n-1) E_{n-1} + c (n-1)^2 E_{n-2}
  std::vector<Rational> e{1};
  const Polynomial p = s.p();
  for (int n = 1; n <= n_max; ++n) {
    Rational v = p(Rational(n - 1)) * e[static_cast<std::size_t>(n - 1)];
    if (n >= 2) v += s.c * (n - 1) * (n - 1) * e[static_cast<std::size_t>(n - 2)];
    e.push_back(v / (n * n));
  }
  return e;
}

ThetaOperator hadamard_2x2(const Polynomial& p, const Rational& c, const Polynomial& q) {
  if (p.degree() > 2) throw PreconditionError("hadamard_2x2 needs deg P <= 2");
  if (q.degree() != 2) throw PreconditionError("hadamard_2x2 needs deg Q = 2");
  return ThetaOperator({Polynomial::monomial(1, 4), -(p * q), -c * q * q.shifted(1)}).canonical();
}

ThetaOperator hadamard_product(const HyperSecond& h, const DegreeTwoSecond& s) {
  return hadamard_2x2(s.p(), s.c, h.q);
}

bool hadamard_excluded(const HyperSecond& h, const DegreeTwoSecond& s) {
  return h.name == "C" && (s.name == "h" || s.name == "e");
}

ThetaOperator binom_lift_third(const Polynomial& p, const Rational& c) {
  if (p.degree() != 2) throw PreconditionError("binom_lift_third needs deg P = 2");
  const Polynomial t21 = lin(2, 1);
  const Polynomial t1 = lin(1, 1);
  return ThetaOperator({Polynomial::monomial(1, 4), -(t21 * t21 * p), c * t1 * t1 * t21 * lin(2, 3)}).canonical();
}

std::span<const BinomLiftRow> binom_lift_rows() {
  auto quad = [](long k, long a, long b) { return k * Polynomial{Rational(b), Rational(a), Rational(a)}; };
  static const std::vector<BinomLiftRow> table = {
      {"alpha", "16", quad(4, 5, 2), 256},       {"gamma", "29", quad(16, 2, 1), 1024},
      {"delta", "41", quad(2, 7, 3), 324},       {"epsilon", "42", quad(8, 3, 1), 64},
      {"zeta", "185", quad(6, 3, 1), -108},      {"eta", "184", quad(2, 11, 5), 500},
      {"iota", "4*", quad(6, 9, 5), 2916},       {"kappa", "13*", quad(48, 18, 13), 746496},
  };
  return table;
}

std::vector<Rational> HypergeometricQuinticSpec::a() const { return {Rational(1, 2), a2, 1 - a2, a4, 1 - a4}; }

HypergeometricQuinticSpec HypergeometricQuinticSpec::from_alpha_beta(const Rational& alpha, const Rational& beta,
                                                                     const Rational& c) {
  return {Rational(1, 2) + alpha, Rational(1, 2) + beta, c};
}

ThetaOperator hypergeometric_quintic(const HypergeometricQuinticSpec& spec) {
  if (spec.c == 0) throw PreconditionError("hypergeometric quintic needs c != 0");
  Polynomial prod = Polynomial::constant(-spec.c);
  for (const auto& aj : spec.a()) prod *= Polynomial::linear_root(-aj);
  return ThetaOperator({Polynomial::monomial(1, 5), prod}).canonical();
}

ThetaOperator pullback_closed_form(const Rational& alpha, const Rational& beta, const Rational& c) {
  const Polynomial h = Polynomial{Rational(1, 2), 1};
  const Polynomial h2 = h * h;
  const Rational sq = alpha * alpha + beta * beta;
  Polynomial bracket = 2 * h2 * h2 + Rational(1, 2) * (Rational(7, 2) - sq) * h2;
  bracket += Polynomial::constant(Rational(1, 16) - Rational(1, 4) * (alpha * alpha + Rational(1, 4)) *
                                                        (beta * beta + Rational(1, 4)));
  const Rational s = (alpha + beta) / 2;
  const Rational d = (alpha - beta) / 2;
  const Polynomial quartic = Polynomial{1 + s, 1} * Polynomial{1 - s, 1} * Polynomial{1 + d, 1} * Polynomial{1 - d, 1};
  return ThetaOperator({Polynomial::monomial(1, 4), -c * bracket, c * c * quartic}).canonical();
}

std::span<const TildeRow> tilde_rows() {
  auto row = [](int m, Rational a2, Rational a4, Rational c, Rational alpha, Rational beta) {
    return TildeRow{m, {a2, a4, c}, alpha, beta};
  };
  using R = Rational;
  static const std::vector<TildeRow> table = {
      row(1, R(1, 5), R(2, 5), 4 * 3125, R(-3, 10), R(-1, 10)),
      row(2, R(1, 10), R(3, 10), 4 * 8 * 100000, R(-2, 5), R(-1, 5)),
      row(3, R(1, 2), R(1, 2), 4 * 256, 0, 0),
      row(4, R(1, 3), R(1, 3), 4 * 729, R(-1, 6), R(-1, 6)),
      row(5, R(1, 2), R(1, 3), 4 * 432, 0, R(-1, 6)),
      row(6, R(1, 2), R(1, 4), 4 * 1024, 0, R(-1, 4)),
      row(7, R(1, 8), R(3, 8), 4 * 65536, R(-3, 8), R(-1, 8)),
      row(8, R(1, 6), R(1, 3), 4 * 11664, R(-1, 3), R(-1, 6)),
      row(9, R(1, 12), R(5, 12), 4 * 2985984, R(-5, 12), R(-1, 12)),
      row(10, R(1, 4), R(1, 4), 4 * 4096, R(-1, 4), R(-1, 4)),
      row(11, R(1, 4), R(1, 3), 4 * 1728, R(-1, 4), R(-1, 6)),
      row(12, R(1, 6), R(1, 4), 4 * 1024 * 27, R(-1, 3), R(-1, 4)),
      row(13, R(1, 6), R(1, 6), 4 * 256 * 729, R(-1, 3), R(-1, 3)),
      row(14, R(1, 2), R(1, 6), 4 * 256 * 27, 0, R(-1, 3)),
  };
  return table;
}

const TildeRow& tilde_row(int index) {
  for (const auto& r : tilde_rows())
    if (r.index == index) return r;
  throw NotFoundError("no hypergeometric pullback row " + std::to_string(index) + " (expected 1-14)");
}

PowerSeries theorem_double_sum(const HypergeometricQuinticSpec& spec, int order) {
  const auto a = spec.a();
  std::vector<Rational> term(static_cast<std::size_t>(order) + 1);
  std::vector<Rational> dlog(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    term[static_cast<std::size_t>(k)] = hypergeometric_term(a, k);
    dlog[static_cast<std::size_t>(k)] = log_derivative(a, k);
  }
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
  Rational cn = 1;
  for (int n = 0; n <= order; ++n, cn *= spec.c) {
    Rational s = 0;
    for (int k = 0; k <= n; ++k)
      s += term[static_cast<std::size_t>(k)] * term[static_cast<std::size_t>(n - k)] *
           (1 + (2 * k - n) * dlog[static_cast<std::size_t>(k)]);
    out[static_cast<std::size_t>(n)] = cn * s;
  }
  return PowerSeries(std::move(out), order);
}

cystruct::IdentityReport theorem_solution_check(const Rational& alpha, const Rational& beta, const Rational& c,
                                               int order) {
  const auto basis = frobenius::frobenius_basis(pullback_closed_form(alpha, beta, c), order);
  const PowerSeries y0 = basis.solutions[0].part(0).truncated(order);
  const PowerSeries lhs = PowerSeries({1, -c}, order) * y0 * y0;
  const PowerSeries diff = lhs - theorem_double_sum(HypergeometricQuinticSpec::from_alpha_beta(alpha, beta, c), order);
  cystruct::IdentityReport report;
  report.id = "THEOREM-Y0";
  const int v = diff.valuation();
  if (v >= 0) report.residual_valuation = v;
  report.pass = v < 0;
  return report;
}

PowerSeries quintic_w1_closed_form(const HypergeometricQuinticSpec& spec, int order) {
  const auto a = spec.a();
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
  Rational cn = spec.c;
  for (int n = 1; n <= order; ++n, cn *= spec.c)
    out[static_cast<std::size_t>(n)] = cn * hypergeometric_term(a, n) * log_derivative(a, n);
  return PowerSeries(std::move(out), order);
}

diffops::DifferenceOperator hadamard_square_recursion(const Rational& a, const Rational& b, const Rational& c) {
  // U(n) = a(n+1)^2 + a(n+1) + b
  const Polynomial u = Polynomial{b, a, a}.shifted(1);
  const Polynomial u1 = u.shifted(1);
  auto fourth = [](long s) { return exact::pow(Polynomial{Rational(s), 1}, 4); };
  const Polynomial inner = u * u1 + c * fourth(2);
  return diffops::DifferenceOperator({
      c * c * c * u1 * fourth(1),
      -c * u * inner,
      -(u1 * inner),
      u * fourth(3),
  });
}

}  // namespace cykit::families
