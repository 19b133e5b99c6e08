#include "cykit/exact/log_series.hpp"

#include <algorithm>

#include "cykit/error.hpp"

namespace cykit::exact {

LogSeries::LogSeries(int valuation, int precision, std::vector<std::vector<Rational>> parts)
    : valuation_(valuation), precision_(std::max(precision, valuation)), parts_(std::move(parts)) {
  const auto n = static_cast<std::size_t>(precision_ - valuation_);
  for (auto& p : parts_) p.resize(n);
  normalize();
}

LogSeries LogSeries::from_series(const PowerSeries& s) {
  return LogSeries(0, s.order() + 1, {std::vector<Rational>(s.coefficients().begin(), s.coefficients().end())});
}

LogSeries LogSeries::from_parts(std::span<const PowerSeries> parts) {
  int order = parts.empty() ? 0 : parts.front().order();
  for (const auto& p : parts) order = std::min(order, p.order());
  std::vector<std::vector<Rational>> v;
  for (const auto& p : parts) v.emplace_back(p.coefficients().begin(), p.coefficients().begin() + order + 1);
  return LogSeries(0, order + 1, std::move(v));
}

LogSeries LogSeries::log_power(int j, int precision) {
  std::vector<std::vector<Rational>> v(static_cast<std::size_t>(j) + 1);
  v[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(std::max(precision, 1)), Rational(0));
  v[static_cast<std::size_t>(j)][0] = 1;
  return LogSeries(0, precision, std::move(v));
}

void LogSeries::normalize() {
  auto part_zero = [](const std::vector<Rational>& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& r) { return sgn(r) == 0; });
  };
  while (!parts_.empty() && part_zero(parts_.back())) parts_.pop_back();
  std::size_t lead = 0;
  const std::size_t n = static_cast<std::size_t>(precision_ - valuation_);
  while (lead < n && std::all_of(parts_.begin(), parts_.end(), [&](const auto& p) { return sgn(p[lead]) == 0; })) {
    ++lead;
  }
  if (parts_.empty()) lead = n;
  if (lead > 0) {
    for (auto& p : parts_) p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(lead));
    valuation_ += static_cast<int>(lead);
  }
}

int LogSeries::log_degree() const { return static_cast<int>(parts_.size()) - 1; }

Rational LogSeries::coefficient(int j, int exponent) const {
  if (j < 0 || j >= static_cast<int>(parts_.size())) return 0;
  if (exponent < valuation_ || exponent >= precision_) return 0;
  return parts_[static_cast<std::size_t>(j)][static_cast<std::size_t>(exponent - valuation_)];
}

PowerSeries LogSeries::part(int j) const {
  if (precision_ < 1) throw DomainError("log series carries no nonnegative exponents");
  for (int e = valuation_; e < 0; ++e) {
    if (sgn(coefficient(j, e)) != 0) throw DomainError("log series part has a pole at x = 0");
  }
  PowerSeries s(precision_ - 1);
  for (int e = std::max(valuation_, 0); e < precision_; ++e) s.coefficient(e) = coefficient(j, e);
  return s;
}

std::optional<int> LogSeries::valuation() const {
  if (parts_.empty() || valuation_ >= precision_) return std::nullopt;
  return valuation_;
}

LogSeries LogSeries::derivative() const {
  const auto n = static_cast<std::size_t>(precision_ - valuation_);
  std::vector<std::vector<Rational>> out(parts_.size(), std::vector<Rational>(n));
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& c = parts_[j][k];
      if (sgn(c) == 0) continue;
      out[j][k] += c * (valuation_ + static_cast<int>(k));
      if (j > 0) out[j - 1][k] += c;
    }
  }
  return LogSeries(valuation_ - 1, precision_ - 1, std::move(out));
}

LogSeries LogSeries::theta() const {
  const auto n = static_cast<std::size_t>(precision_ - valuation_);
  std::vector<std::vector<Rational>> out(parts_.size(), std::vector<Rational>(n));
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& c = parts_[j][k];
      if (sgn(c) == 0) continue;
      out[j][k] += c * (valuation_ + static_cast<int>(k));
      if (j > 0) out[j - 1][k] += c;
    }
  }
  return LogSeries(valuation_, precision_, std::move(out));
}

LogSeries LogSeries::shifted(int k) const {
  LogSeries r = *this;
  r.valuation_ += k;
  r.precision_ += k;
  return r;
}

LogSeries LogSeries::truncated(int precision) const {
  if (precision >= precision_) return *this;
  const int p = std::max(precision, valuation_);
  std::vector<std::vector<Rational>> v = parts_;
  for (auto& part : v) part.resize(static_cast<std::size_t>(p - valuation_));
  return LogSeries(valuation_, p, std::move(v));
}

LogSeries& LogSeries::operator+=(const LogSeries& o) {
  const int start = std::min(valuation_, o.valuation_);
  const int prec = std::min(precision_, o.precision_);
  const auto n = static_cast<std::size_t>(std::max(prec - start, 0));
  std::vector<std::vector<Rational>> out(std::max(parts_.size(), o.parts_.size()), std::vector<Rational>(n));
  for (std::size_t j = 0; j < out.size(); ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const int e = start + static_cast<int>(k);
      out[j][k] = coefficient(static_cast<int>(j), e) + o.coefficient(static_cast<int>(j), e);
    }
  }
  return *this = LogSeries(start, std::max(prec, start), std::move(out));
}

LogSeries& LogSeries::operator-=(const LogSeries& o) { return *this += o * Rational(-1); }

LogSeries& LogSeries::operator*=(const Rational& c) {
  for (auto& p : parts_) {
    for (auto& v : p) v *= c;
  }
  normalize();
  return *this;
}

LogSeries operator*(const LogSeries& a, const LogSeries& b) {
  const int start = a.valuation_ + b.valuation_;
  const int prec = std::min(a.precision_ + b.valuation_, b.precision_ + a.valuation_);
  const auto n = static_cast<std::size_t>(std::max(prec - start, 0));
  if (a.parts_.empty() || b.parts_.empty()) return LogSeries(start, prec, {});
  std::vector<std::vector<Rational>> out(a.parts_.size() + b.parts_.size() - 1, std::vector<Rational>(n));
  for (std::size_t i = 0; i < a.parts_.size(); ++i) {
    for (std::size_t j = 0; j < b.parts_.size(); ++j) {
      const Integer weight = binomial(static_cast<long>(i + j), static_cast<long>(i));
      auto& dest = out[i + j];
      for (std::size_t k = 0; k < n && k < a.parts_[i].size(); ++k) {
        const Rational& ak = a.parts_[i][k];
        if (sgn(ak) == 0) continue;
        const Rational scaled = ak * weight;
        for (std::size_t l = 0; k + l < n && l < b.parts_[j].size(); ++l) {
          const Rational& bl = b.parts_[j][l];
          if (sgn(bl) != 0) dest[k + l] += scaled * bl;
        }
      }
    }
  }
  return LogSeries(start, prec, std::move(out));
}

LogSeries operator*(const LogSeries& a, const PowerSeries& b) { return a * LogSeries::from_series(b); }

LogSeries operator*(const LogSeries& a, const GaugeSeries& g) {
  if (!is_integer(g.exponent)) throw DomainError("log series times x^rho needs an integer rho");
  return (a * g.unit).shifted(static_cast<int>(g.exponent.get_num().get_si()));
}

LogSeries operator/(const LogSeries& a, const PowerSeries& b) {
  if (sgn(b[0]) == 0) throw DomainError("log series division needs a divisor with nonzero constant term");
  return a * b.inverse();
}

namespace {

LogSeries determinant(const std::vector<std::vector<LogSeries>>& m) {
  const std::size_t p = m.size();
  if (p == 1) return m[0][0];
  std::optional<LogSeries> acc;
  for (std::size_t col = 0; col < p; ++col) {
    std::vector<std::vector<LogSeries>> minor;
    for (std::size_t r = 1; r < p; ++r) {
      std::vector<LogSeries> row;
      for (std::size_t c = 0; c < p; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    LogSeries term = m[0][col] * determinant(minor);
    if (col % 2 == 1) term *= Rational(-1);
    if (acc) {
      *acc += term;
    } else {
      acc = std::move(term);
    }
  }
  return *acc;
}

}  // namespace

LogSeries log_wronskian(std::span<const LogSeries> solutions) {
  if (solutions.empty()) throw PreconditionError("Wronskian of an empty list");
  for (const auto& s : solutions) {
    if (s.precision() != solutions.front().precision()) {
      throw PreconditionError("Wronskian inputs have mixed truncation orders");
    }
  }
  const std::size_t p = solutions.size();
  std::vector<std::vector<LogSeries>> m(p);
  m[0].assign(solutions.begin(), solutions.end());
  for (std::size_t i = 1; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) m[i].push_back(m[i - 1][j].derivative());
  }
  return determinant(m);
}

}  // namespace cykit::exact
