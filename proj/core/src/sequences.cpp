#include <functional>
#include <map>

#include "cykit/error.hpp"
#include "cykit/families/families.hpp"

namespace cykit::families {

namespace {

using exact::binomial;
using exact::factorial;

Rational C(long n, long k) { return Rational(binomial(n, k)); }
Rational C(const Rational& a, long k) { return binomial(a, k); }
Rational sign(long e) { return e % 2 == 0 ? 1 : -1; }
Rational pw(long base, long e) { return exact::power(Rational(base), e); }

// sum over compositions of n into `parts` parts of the squared multinomial,
// n!^2 [x^n] (sum x^k / k!^2)^parts.
std::vector<Rational> squared_multinomials(int parts, int n_max) {
  std::vector<Rational> base(static_cast<std::size_t>(n_max) + 1);
  for (int k = 0; k <= n_max; ++k) {
    Rational f(factorial(static_cast<unsigned>(k)));
    base[static_cast<std::size_t>(k)] = 1 / (f * f);
  }
  PowerSeries b(base, n_max);
  PowerSeries acc = PowerSeries::one(n_max);
  for (int i = 0; i < parts; ++i) acc = acc * b;
  std::vector<Rational> out;
  for (int n = 0; n <= n_max; ++n) {
    Rational f(factorial(static_cast<unsigned>(n)));
    out.push_back(acc[n] * f * f);
  }
  return out;
}

Rational dj(long n) {
  Rational s = 0;
  for (long k = 0; k <= n; ++k) s += sign(k) * C(Rational(-5, 6), k) * C(Rational(-1, 6), n - k) * C(Rational(-1, 6), n - k);
  Rational d(factorial(6 * n) / (factorial(3 * n) * factorial(2 * n) * factorial(n)));
  return d * pw(432, n) * s;
}

// 27^n C(2n,n)^2 C(3n,n) sum (-1)^{n+k} C(n,k) C(-1/3,k) C(-2/3,k) / C(n+k,n)
Rational a145(long n) {
  Rational s = 0;
  for (long k = 0; k <= n; ++k) s += sign(n + k) * C(n, k) * C(Rational(-1, 3), k) * C(Rational(-2, 3), k) / C(n + k, n);
  return pw(27, n) * C(2 * n, n) * C(2 * n, n) * C(3 * n, n) * s;
}

Rational a155(long n) {
  Rational s = 0;
  for (long k = 0; k <= n; ++k) s += sign(n + k) * C(n, k) * C(Rational(-1, 4), k) * C(Rational(-3, 4), k) / C(n + k, n);
  return pw(64, n) * C(2 * n, n) * C(2 * n, n) * C(4 * n, 2 * n) * s;
}

Rational a165(long n) {
  Rational s = 0;
  for (long k = 0; k <= n; ++k) s += sign(n + k) * C(n, k) * C(3 * k, n) * C(Rational(-1, 3), k) * C(Rational(-2, 3), k);
  return pw(27, n) * C(2 * n, n) * s;
}

Rational a214(long n) {
  Rational s = 0;
  for (long i = 0; i <= n; ++i)
    for (long j = 0; j <= n; ++j) {
      Rational b = C(i + j, j);
      s += sign(i + j) * C(n, i) * C(n, j) * b * b * b;
    }
  return C(2 * n, n) * s;
}

Rational a227(long n) {
  Rational s = 0;
  for (long k = 0; k <= n; ++k) s += sign(n + k) * C(n, k) * C(3 * k, n) * C(Rational(-1, 6), k) * C(Rational(-5, 6), k);
  return pw(432, n) * C(2 * n, n) * s;
}

Rational a228(long n) {
  Rational s = 0;
  for (long k = 0; k <= n; ++k) s += sign(n + k) * C(n, k) * C(3 * k, n) * C(Rational(-1, 4), k) * C(Rational(-3, 4), k);
  return pw(64, n) * C(2 * n, n) * s;
}

Rational a232(long n) {
  Rational s = 0;
  for (long k = 0; k <= n; ++k) s += C(n, k) * C(n, k) * C(3 * n, n + k);
  return C(2 * n, n) * C(2 * n, n) * s;
}

std::vector<Rational> termwise(const std::function<Rational(long)>& f, int n_max) {
  std::vector<Rational> out;
  for (long n = 0; n <= n_max; ++n) out.push_back(f(n));
  return out;
}

}  // namespace

std::span<const std::string> sequence_oracle_names() {
  static const std::vector<std::string> names = {"130", "D*j", "34", "145", "155", "165", "214", "227", "228", "232"};
  return names;
}

std::vector<Rational> sequence_oracle(std::string_view name, int n_max) {
  if (n_max < 0) throw DomainError("sequence length must be non-negative");
  static const std::map<std::string, std::function<Rational(long)>, std::less<>> closed = {
      {"D*j", dj},   {"145", a145}, {"155", a155}, {"165", a165},
      {"214", a214}, {"227", a227}, {"228", a228}, {"232", a232},
  };
  if (name == "130") return squared_multinomials(6, n_max);
  if (name == "34") return squared_multinomials(5, n_max);
  if (auto it = closed.find(name); it != closed.end()) return termwise(it->second, n_max);
  throw NotFoundError("no coefficient formula for '" + std::string(name) + "'");
}

}  // namespace cykit::families
