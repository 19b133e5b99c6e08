#include "cykit/exact/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cykit/error.hpp"

namespace cykit::exact {

namespace {

const Rational& zero() {
  static const Rational z(0);
  return z;
}

// Prime factorisation by trial division; a cofactor left after the bound is
// treated as prime.
std::vector<std::pair<Integer, int>> factor_integer(Integer n) {
  std::vector<std::pair<Integer, int>> factors;
  if (n < 0) n = -n;
  if (n < 2) return factors;
  auto take = [&](const Integer& p) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  };
  take(2);
  constexpr unsigned long kBound = 2000000;
  for (unsigned long p = 3; p <= kBound; p += 2) {
    Integer pz(p);
    if (pz * pz > n) break;
    take(pz);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> result{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = result.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) result.push_back(result[i] * pk);
    }
  }
  return result;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int exponent) {
  std::vector<Rational> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::variable() { return monomial(1, 1); }

Polynomial Polynomial::linear_root(const Rational& root) { return Polynomial{-root, Rational(1)}; }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& Polynomial::operator[](int i) const {
  if (i < 0 || i > degree()) return zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(const Rational& c) const {
  if (sgn(c) == 0 || degree() < 1) return *this;
  // Horner in place: repeated synthetic division by (t - c) style update.
  std::vector<Rational> a = coeffs_;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += c * a[j];
  }
  return Polynomial(std::move(a));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  std::vector<Rational> a = coeffs_;
  Rational ck(1);
  for (auto& v : a) {
    v *= ck;
    ck *= c;
  }
  return Polynomial(std::move(a));
}

Polynomial Polynomial::compose(const Polynomial& q) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + constant(*it);
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

Rational Polynomial::content() const {
  if (is_zero()) return 0;
  Integer num = 0, den = 1;
  for (const auto& c : coeffs_) {
    if (sgn(c) == 0) continue;
    num = gcd(num, c.get_num());
    den = lcm(den, c.get_den());
  }
  return make_rational(num, den);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial operator-(Polynomial a) {
  for (auto& v : a.coeffs_) v = -v;
  return a;
}

PolynomialDivision divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Polynomial{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1));
  const Rational inv = Rational(1) / b.leading();
  for (int i = da; i >= db; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] * inv;
    if (sgn(q) == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial u = a.monic();
  Polynomial v = b.monic();
  while (!v.is_zero()) {
    Polynomial r = divmod(u, v).remainder.monic();
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial falling_factorial(int j) {
  Polynomial p = Polynomial::constant(1);
  for (int l = 0; l < j; ++l) p *= Polynomial::linear_root(l);
  return p;
}

std::vector<std::pair<Rational, int>> rational_roots(const Polynomial& p) {
  std::vector<std::pair<Rational, int>> roots;
  if (p.degree() < 1) return roots;
  Polynomial rest = p * (Rational(1) / p.content());
  int zero_mult = 0;
  while (sgn(rest[0]) == 0) {
    rest = divmod(rest, Polynomial::variable()).quotient;
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(0, zero_mult);
  if (rest.degree() >= 1) {
    const auto lows = divisors(rest[0].get_num());
    const auto highs = divisors(rest.leading().get_num());
    std::map<Rational, bool> tried;
    for (const auto& num : lows) {
      for (const auto& den : highs) {
        for (int sign : {1, -1}) {
          Rational cand = make_rational(num * sign, den);
          if (tried[cand]) continue;
          tried[cand] = true;
          int mult = 0;
          while (rest.degree() >= 1 && sgn(rest(cand)) == 0) {
            rest = divmod(rest, Polynomial::linear_root(cand)).quotient;
            ++mult;
          }
          if (mult > 0) roots.emplace_back(cand, mult);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return roots;
}

std::string to_string(const Polynomial& p, std::string_view variable) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (sgn(c) < 0) {
      out << "-";
    } else if (!first) {
      out << "+";
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << variable;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

}  // namespace cykit::exact
