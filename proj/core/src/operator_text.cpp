#include "cykit/cli/operator_text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "cykit/error.hpp"
#include "cykit/opalg/weyl.hpp"

namespace cykit::cli {

namespace {

using exact::Polynomial;
using exact::Rational;

class Parser {
 public:
  Parser(std::string_view text, char variable, bool allow_x) : text_(text), variable_(variable), allow_x_(allow_x) {}

  ThetaOperator parse() {
    ThetaOperator value = expression();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "', expected an operator or end of input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ThetaOperator expression() {
    ThetaOperator value = term();
    for (;;) {
      if (accept('+'))
        value += term();
      else if (accept('-'))
        value -= term();
      else
        return value;
    }
  }

  ThetaOperator term() {
    ThetaOperator value = unary();
    for (;;) {
      if (accept('*')) {
        value = opalg::weyl_multiply(value, unary());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        ThetaOperator divisor = unary();
        if (divisor.degree() != 0 || divisor.order() != 0) {
          pos_ = at;
          fail("division is only allowed by nonzero constants");
        }
        value *= 1 / divisor.coefficient(0)[0];
      } else {
        skip_space();
        if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '('))
          fail("missing '*' (no implicit multiplication)");
        return value;
      }
    }
  }

  ThetaOperator unary() {
    if (accept('-')) return unary() * Rational(-1);
    if (accept('+')) return unary();
    return power();
  }

  ThetaOperator power() {
    ThetaOperator base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    if (pos_ - start > 4) fail("exponent too large");
    const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    ThetaOperator out = ThetaOperator::theta_power(0);
    for (int i = 0; i < e; ++i) out = opalg::weyl_multiply(out, base);
    return out;
  }

  ThetaOperator primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input, expected a number, 'x', 'T' or '('");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ThetaOperator inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      if (!allow_x_) fail("'x' is not allowed in a polynomial");
      ++pos_;
      return ThetaOperator::term(1, Polynomial::constant(1));
    }
    if (c == variable_) {
      ++pos_;
      return ThetaOperator::theta_power(1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational v(exact::Integer(std::string(text_.substr(start, pos_ - start))));
      return ThetaOperator::term(0, Polynomial::constant(v));
    }
    fail("unexpected '" + std::string(1, c) + "', expected a number, 'x', 'T' or '('");
  }

  std::string_view text_;
  char variable_;
  bool allow_x_;
  std::size_t pos_ = 0;
};

ThetaOperator parse_machine(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  auto next_line = [&](const char* what) {
    if (!std::getline(in, line)) throw ParseError(std::string("machine record ends before ") + what, offset);
    offset += line.size() + 1;
  };
  next_line("the header");
  if (line != "CYOP 1") throw ParseError("unsupported machine record header '" + line + "'", 0);
  next_line("the shape line");
  std::istringstream shape(line);
  std::string k_word, d_word;
  int k = -1, d = -1;
  if (!(shape >> k_word >> k >> d_word >> d) || k_word != "order" || d_word != "degree" || k < 0 || d < 0)
    throw ParseError("expected 'order k degree d'", offset - line.size() - 1);
  std::vector<Polynomial> polys;
  for (int i = 0; i <= d; ++i) {
    next_line("all coefficient lines");
    std::istringstream row(line);
    std::vector<Rational> coeffs;
    std::string token;
    while (row >> token) {
      try {
        coeffs.push_back(exact::parse_rational(token));
      } catch (const Error&) {
        throw ParseError("bad coefficient '" + token + "'", offset - line.size() - 1);
      }
    }
    polys.emplace_back(std::move(coeffs));
  }
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) throw ParseError("trailing text after machine record", offset);
  ThetaOperator op(std::move(polys));
  if (op.order() != k || op.degree() != d) throw ParseError("order/degree line does not match the coefficients", 0);
  return op.canonical();
}

std::string wrap_polynomial(const Polynomial& p) {
  const std::string s = exact::to_string(p, "T");
  const bool single = p.coefficients().size() == 1 || std::count_if(p.coefficients().begin(), p.coefficients().end(),
                                                                    [](const Rational& c) { return c != 0; }) == 1;
  return single && s.front() != '-' ? s : "(" + s + ")";
}

}  // namespace

ThetaOperator parse_operator(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text.substr(first).starts_with("CYOP")) return parse_machine(text.substr(first));
  ThetaOperator op = Parser(text, 'T', true).parse();
  if (op.is_zero()) throw ParseError("operator is zero", 0);
  return op.canonical();
}

Polynomial parse_polynomial(std::string_view text, char variable) {
  return Parser(text, variable, false).parse().coefficient(0);
}

std::string render_operator(const ThetaOperator& op, RenderStyle style) {
  std::ostringstream out;
  if (style == RenderStyle::machine) {
    const int k = std::max(op.order(), 0);
    out << "CYOP 1\norder " << op.order() << " degree " << op.degree() << "\n";
    for (int i = 0; i <= op.degree(); ++i) {
      for (int j = 0; j <= k; ++j) out << (j ? " " : "") << exact::to_string(op.coefficient(i)[j]);
      out << "\n";
    }
    return out.str();
  }
  if (op.is_zero()) return "0";
  bool first = true;
  for (int i = 0; i <= op.degree(); ++i) {
    Polynomial p = op.coefficient(i);
    if (p.is_zero()) continue;
    const bool negative = p.leading() < 0;
    if (negative) p = -p;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (i == 0) {
      out << wrap_polynomial(p);
      continue;
    }
    out << (i == 1 ? std::string("x") : "x^" + std::to_string(i));
    if (p != Polynomial::constant(1)) out << "*" << wrap_polynomial(p);
  }
  return out.str();
}

}  // namespace cykit::cli
