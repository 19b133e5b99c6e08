#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cykit/cli/catalog.hpp"
#include "cykit/cli/operator_text.hpp"
#include "cykit/cystruct/cystruct.hpp"
#include "cykit/diffops/difference.hpp"
#include "cykit/error.hpp"
#include "cykit/families/families.hpp"
#include "cykit/frobenius/frobenius.hpp"
#include "cykit/opalg/weyl.hpp"

namespace {

using namespace cykit;
using cli::RenderStyle;
using exact::Integer;
using exact::Polynomial;
using exact::PowerSeries;
using exact::Rational;
using opalg::ThetaOperator;

enum Exit { kOk = 0, kCheckFail = 1, kUsage = 2, kPrecondition = 3, kInternal = 4 };

int default_order() {
  if (const char* env = std::getenv("CYKIT_ORDER"); env && *env) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "cy: ignoring invalid CYKIT_ORDER='" << env << "'\n";
  }
  return exact::kDefaultOrder;
}

class Printer {
 public:
  explicit Printer(const std::string& format) : machine_(format == "machine") {}
  bool machine() const { return machine_; }

  void field(const std::string& key, const std::string& value) const {
    std::cout << key << (machine_ ? " " : ": ") << value << "\n";
  }

  void values(const std::string& key, std::span<const Rational> v) const {
    std::string s;
    for (const auto& c : v) s += (s.empty() ? "" : machine_ ? " " : ", ") + exact::to_string(c);
    field(key, s);
  }

  void series(const std::string& key, const PowerSeries& p) const { values(key, p.coefficients()); }

  void op(const std::string& key, const ThetaOperator& L) const {
    if (machine_) {
      std::cout << key << "\n" << cli::render_operator(L, RenderStyle::machine);
    } else {
      field(key, cli::render_operator(L));
    }
  }

  void flag(const std::string& key, bool v) const { field(key, v ? "pass" : "fail"); }

 private:
  bool machine_;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Catalog id or alias, then file path, then inline text.
ThetaOperator resolve(const std::string& arg) {
  if (const auto* e = cli::Catalog::builtin().find(arg)) {
    if (!e->op) throw PreconditionError("catalog entry '" + e->id + "' has no operator");
    return *e->op;
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return cli::parse_operator(slurp(arg));
  const bool identifier = std::ranges::all_of(arg, [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_'; });
  const bool names_only = std::ranges::any_of(arg, [](char c) { return std::isalpha(static_cast<unsigned char>(c)) && c != 'x' && c != 'T'; });
  if (identifier && names_only) cli::Catalog::builtin().get(arg);
  return cli::parse_operator(arg);
}

Rational rational_arg(const std::string& s) { return exact::parse_rational(s); }

std::string name_part(std::string s) {
  for (const char* prefix : {"hyper-", "second-"})
    if (s.starts_with(prefix)) s = s.substr(std::string(prefix).size());
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return s;
}

// Hadamard product of two second-order entries. A hypergeometric factor uses
// the closed formula; two second-degree factors are fitted from the product
// sequence.
ThetaOperator hadamard_of(const std::string& left, const std::string& right) {
  const std::string l = name_part(left), r = name_part(right);
  auto is_hyper = [](const std::string& n) { return n.size() == 1 && n[0] >= 'A' && n[0] <= 'D'; };
  if (is_hyper(l) && !is_hyper(r)) return families::hadamard_product(families::hyper_second(l), families::degree_two_second(r));
  if (is_hyper(r) && !is_hyper(l)) return families::hadamard_product(families::hyper_second(r), families::degree_two_second(l));
  std::vector<Rational> a, b;
  if (is_hyper(l)) {
    a = families::solution_sequence(families::hyper_second(l), 60);
    b = families::solution_sequence(families::hyper_second(r), 60);
  } else {
    a = families::solution_sequence(families::degree_two_second(l), 60);
    b = families::solution_sequence(families::degree_two_second(r), 60);
  }
  std::vector<Rational> s;
  for (std::size_t n = 0; n < a.size(); ++n) s.push_back(a[n] * b[n]);
  auto fit = frobenius::series_annihilator(s, 4, 6);
  if (!fit) throw StructuralError("no annihilator of order <= 4 and degree <= 6 for the product sequence");
  return *fit;
}

diffops::DifferenceOperator parse_difference(const std::string& text) {
  std::vector<Polynomial> q;
  std::string normalized(text);
  std::ranges::replace(normalized, ',', ';');
  std::stringstream in(normalized);
  for (std::string part; std::getline(in, part, ';');) q.push_back(cli::parse_polynomial(part, 'n'));
  return diffops::DifferenceOperator(std::move(q));
}

void print_difference(const Printer& out, const diffops::DifferenceOperator& R) {
  out.field("order", std::to_string(R.order()));
  for (int i = 0; i <= R.order(); ++i) out.field("q" + std::to_string(i), exact::to_string(R.coefficient(i), "n"));
}

void print_signature(const Printer& out, const diffops::QuadraticSignature& sig) {
  out.field("q0", exact::to_string(sig.q0, "n"));
  out.field("discriminant", sig.discriminant.get_str());
  out.field("abs_discriminant", Integer(abs(sig.discriminant)).get_str());
  out.field("b_mod_2a", sig.b_canonical.get_str());
  std::string ids;
  for (const auto& id : diffops::superseeker_lookup(sig)) ids += (ids.empty() ? "" : ",") + id;
  out.field("ids", ids.empty() ? "none" : ids);
}


int verify_catalog(const Printer& out, bool relations, int order) {
  const auto& cat = cli::Catalog::builtin();
  int failures = 0;
  for (const auto& e : cat.entries()) {
    if (!e.op) continue;
    const ThetaOperator& L = *e.op;
    std::vector<std::string> problems;
    if (cli::parse_operator(cli::render_operator(L)) != L ||
        cli::parse_operator(cli::render_operator(L, RenderStyle::machine)) != L)
      problems.push_back("round-trip");
    const bool mum = frobenius::mum_check(L);
    if (!mum && !e.has_tag("non-mum")) problems.push_back("mum");
    if (mum && L.order() == 4 && !e.excluded && !e.has_tag("factorable") && !cystruct::cy2_check(L)) problems.push_back("cy2");
    if (mum && L.order() == 5 && !cystruct::cy5_check(L)) problems.push_back("cy5");
    std::string status = "ok";
    if (!problems.empty()) {
      ++failures;
      status = "FAIL";
      for (const auto& p : problems) status += " " + p;
    }
    out.field(e.id, status);
  }
  if (relations) {
    for (const auto& r : cat.relations()) {
      if (r.kind != "equivalent") continue;
      const auto* a = cat.find(r.left);
      const auto* b = cat.find(r.right);
      std::string key = "relation " + r.left + "~" + r.right;
      if (!a || !b || !a->op || !b->op) {
        out.field(key, "skipped (operator not in catalog)");
        continue;
      }
      const bool eq = frobenius::equivalent_k(*a->op, *b->op, order);
      if (!eq) ++failures;
      out.field(key, eq ? "ok" : "FAIL equivalent_k");
    }
  }
  out.field("failures", std::to_string(failures));
  return failures == 0 ? kOk : kCheckFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for Calabi-Yau differential operators", "cy"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  int order = default_order();
  app.add_option("--order", order, "Series order (default from CYKIT_ORDER or 20)")->check(CLI::PositiveNumber);

  std::string op_arg, op_arg2;
  int exit_code = kOk;
  std::function<void(const Printer&)> action;

  auto with_op = [&](CLI::App* sub, const std::string& desc = "Operator text, file path or catalog id") {
    sub->add_option("operator", op_arg, desc)->required();
  };

  auto* parse = app.add_subcommand("parse", "Parse and canonicalize an operator");
  with_op(parse);
  parse->callback([&] {
    action = [&](const Printer& out) {
      const auto L = resolve(op_arg);
      out.op("operator", L);
      out.field("order", std::to_string(L.order()));
      out.field("degree", std::to_string(L.degree()));
    };
  });

  std::string style = "theta";
  auto* render = app.add_subcommand("render", "Render an operator in the theta or machine style");
  with_op(render);
  render->add_option("--style", style)->check(CLI::IsMember({"theta", "machine"}));
  render->callback([&] {
    action = [&](const Printer&) {
      std::cout << cli::render_operator(resolve(op_arg), style == "machine" ? RenderStyle::machine : RenderStyle::theta);
      if (style != "machine") std::cout << "\n";
    };
  });

  auto* frob = app.add_subcommand("frobenius", "Frobenius basis at a MUM point");
  with_op(frob);
  frob->callback([&] {
    action = [&](const Printer& out) {
      const auto basis = frobenius::frobenius_basis(resolve(op_arg), order);
      for (std::size_t j = 0; j < basis.solutions.size(); ++j)
        for (int b = 0; b <= static_cast<int>(j); ++b)
          out.series("y" + std::to_string(j) + ".log" + std::to_string(b), basis.solutions[j].part(b).truncated(order));
    };
  });

  auto* mirror = app.add_subcommand("mirror", "Mirror map q(x) and its inverse");
  with_op(mirror);
  mirror->callback([&] {
    action = [&](const Printer& out) {
      const auto m = frobenius::mirror_map(resolve(op_arg), order);
      out.series("q_over_x", m.q_over_x);
      out.series("x_of_q", m.x_of_q);
    };
  });

  auto* yukawa = app.add_subcommand("yukawa", "Yukawa coupling K(q) = 1 + sum k_m q^m");
  with_op(yukawa);
  yukawa->callback([&] {
    action = [&](const Printer& out) { out.values("k", frobenius::yukawa_coupling(resolve(op_arg), order).k_coeffs); };
  });

  auto* inst = app.add_subcommand("instantons", "Instanton numbers N_1 .. N_M");
  with_op(inst);
  inst->callback([&] {
    action = [&](const Printer& out) {
      const auto m = frobenius::yukawa_coupling(resolve(op_arg), order);
      out.values("n", m.instantons);
      out.field("normalizer", m.normalizer.get_str());
    };
  });

  std::string check_kind;
  auto* check = app.add_subcommand("check", "Structural checks; exit 1 when a check fails");
  check->add_option("kind", check_kind)->required()->check(CLI::IsMember({"mum", "cy2", "cy5", "identities"}));
  with_op(check);
  check->callback([&] {
    action = [&](const Printer& out) {
      const auto L = resolve(op_arg);
      bool pass = false;
      if (check_kind == "mum") {
        pass = frobenius::mum_check(L);
      } else if (check_kind == "cy2") {
        if (L.order() != 4) throw PreconditionError("cy2 needs an order-4 operator");
        pass = cystruct::cy2_check(L);
      } else if (check_kind == "cy5") {
        if (L.order() != 5) throw PreconditionError("cy5 needs an order-5 operator");
        pass = cystruct::cy5_check(L);
      } else {
        pass = true;
        for (const auto& r : cystruct::verify_identities(L, order)) {
          pass = pass && r.pass;
          out.field(r.id, r.pass ? "pass" : "fail at x^" + std::to_string(*r.residual_valuation));
        }
      }
      out.flag(check_kind, pass);
      if (!pass) exit_code = kCheckFail;
    };
  });

  auto* pull = app.add_subcommand("pullback", "Yifan Yang pullback of a fifth-order operator");
  with_op(pull);
  pull->callback([&] { action = [&](const Printer& out) { out.op("operator", cystruct::yang_pullback(resolve(op_arg))); }; });

  auto* lift = app.add_subcommand("lift", "Wronskian lift of a fourth-order C-Y2 operator");
  with_op(lift);
  lift->callback([&] { action = [&](const Printer& out) { out.op("operator", cystruct::wronskian_lift(resolve(op_arg))); }; });

  std::vector<int> indices{0, 1, 2};
  auto* ext = app.add_subcommand("exterior", "Operator of the 3x3 Wronskians W(y_i, y_j, y_k)");
  with_op(ext);
  ext->add_option("--indices", indices)->delimiter(',')->expected(3);
  ext->callback([&] {
    action = [&](const Printer& out) {
      if (indices.size() != 3) throw PreconditionError("--indices needs three values");
      const auto L = cystruct::exterior_power_operator(resolve(op_arg), {indices[0], indices[1], indices[2]});
      out.op("operator", L);
      out.field("degree", std::to_string(L.degree()));
    };
  });

  std::string left, right;
  auto* had = app.add_subcommand("hadamard", "Hadamard product of two second-order equations (A-D, a-j)");
  had->add_option("--left", left)->required();
  had->add_option("--right", right)->required();
  had->callback([&] { action = [&](const Printer& out) { out.op("operator", hadamard_of(left, right)); }; });

  std::string p_text, c_text, name;
  auto* blift = app.add_subcommand("binomlift", "C(2n,n) lift of a third-order equation");
  blift->add_option("--name", name, "Row name such as alpha or kappa");
  blift->add_option("--p", p_text, "P(n)");
  blift->add_option("--c", c_text, "c");
  blift->callback([&] {
    action = [&](const Printer& out) {
      if (!name.empty()) {
        for (const auto& r : families::binom_lift_rows())
          if (r.name == name) return out.op("operator", families::binom_lift_third(r.p, r.c));
        throw NotFoundError("no third-order row '" + name + "'");
      }
      if (p_text.empty() || c_text.empty()) throw CLI::ValidationError("binomlift needs --name or both --p and --c");
      out.op("operator", families::binom_lift_third(cli::parse_polynomial(p_text, 'n'), rational_arg(c_text)));
    };
  });

  std::string a2, a4, alpha, beta;
  auto* hyper5 = app.add_subcommand("hyper5", "Hypergeometric fifth-order operator with a1 = 1/2");
  hyper5->add_option("--a2", a2)->required();
  hyper5->add_option("--a4", a4)->required();
  hyper5->add_option("--c", c_text)->required();
  hyper5->callback([&] {
    action = [&](const Printer& out) {
      out.op("operator", families::hypergeometric_quintic({rational_arg(a2), rational_arg(a4), rational_arg(c_text)}));
    };
  });

  auto* closed = app.add_subcommand("closedform", "Closed-form pullback quartic");
  closed->add_option("--alpha", alpha)->required();
  closed->add_option("--beta", beta)->required();
  closed->add_option("--c", c_text)->required();
  closed->callback([&] {
    action = [&](const Printer& out) {
      out.op("operator", families::pullback_closed_form(rational_arg(alpha), rational_arg(beta), rational_arg(c_text)));
    };
  });

  auto* equiv = app.add_subcommand("equiv", "Compare K(q); exit 1 when they differ");
  equiv->add_option("a", op_arg)->required();
  equiv->add_option("b", op_arg2)->required();
  equiv->callback([&] {
    action = [&](const Printer& out) {
      const bool eq = frobenius::equivalent_k(resolve(op_arg), resolve(op_arg2), order);
      out.flag("equivalent", eq);
      if (!eq) exit_code = kCheckFail;
    };
  });

  bool force = false;
  auto* trans = app.add_subcommand("transform", "f, g with y0_B(x) = f(x) y0_A(g(x))");
  trans->add_option("a", op_arg)->required();
  trans->add_option("b", op_arg2)->required();
  trans->add_flag("--force", force, "Compute f and g even when K(q) differs");
  trans->callback([&] {
    action = [&](const Printer& out) {
      const auto t = frobenius::equivalence_transformation(resolve(op_arg), resolve(op_arg2), order, !force);
      out.series("f", t.f);
      out.series("g", t.g);
    };
  });

  auto* de2diff = app.add_subcommand("de2diff", "Recursion sum q_i(n) A_{n+i} = 0 of an operator");
  with_op(de2diff);
  de2diff->callback([&] { action = [&](const Printer& out) { print_difference(out, diffops::de_to_diff(resolve(op_arg))); }; });

  auto* diff2de = app.add_subcommand("diff2de", "Operator of a recursion given as 'q0; q1; ...' (or commas) in n");
  diff2de->add_option("recursion", op_arg)->required();
  diff2de->callback([&] {
    action = [&](const Printer& out) {
      const auto L = diffops::diff_to_de(parse_difference(op_arg));
      out.op("operator", L.canonical());
    };
  });

  int n_max = 20;
  std::vector<std::string> initial;
  auto* enumerate = app.add_subcommand("enumerate", "Coefficients A_0 .. A_N of the analytic solution or of a recursion");
  enumerate->add_option("input", op_arg, "Operator, or recursion 'q0; q1; ...' when --initial is given")->required();
  enumerate->add_option("--n", n_max)->check(CLI::NonNegativeNumber);
  enumerate->add_option("--initial", initial, "Comma-separated initial values")->delimiter(',')->allow_extra_args(false);
  enumerate->callback([&] {
    action = [&](const Printer& out) {
      std::vector<Rational> seq;
      if (!initial.empty()) {
        std::vector<Rational> init;
        for (const auto& s : initial) init.push_back(rational_arg(s));
        seq = diffops::holonomic_enumerate(parse_difference(op_arg), init, n_max);
      } else {
        seq = frobenius::analytic_coefficients(resolve(op_arg), n_max);
      }
      out.values("a", seq);
    };
  });

  int k_max = 4, d_max = 4;
  auto* factor = app.add_subcommand("factor", "Fit a right factor from the analytic solution and divide");
  with_op(factor);
  factor->add_option("--kmax", k_max)->check(CLI::PositiveNumber);
  factor->add_option("--dmax", d_max)->check(CLI::NonNegativeNumber);
  factor->callback([&] {
    action = [&](const Printer& out) {
      const auto L = resolve(op_arg);
      const int terms = (k_max + 1) * (d_max + 1) + frobenius::kAnnihilatorGuard + 5;
      const auto seq = frobenius::analytic_coefficients(L, terms);
      const auto fit = frobenius::series_annihilator(seq, k_max, d_max);
      if (!fit) {
        out.field("factor", "none");
        exit_code = kCheckFail;
        return;
      }
      out.op("factor", *fit);
      const auto div = opalg::weyl_right_divide(L, *fit);
      out.field("exact", div.exact ? "yes" : "no");
      if (div.quotient_theta) out.op("quotient", *div.quotient_theta);
      if (!div.exact) exit_code = kCheckFail;
    };
  });

  auto* seek = app.add_subcommand("superseek", "Discriminant signature of Q0(n) or of an operator's recursion");
  seek->add_option("input", op_arg)->required();
  seek->callback([&] {
    action = [&](const Printer& out) {
      std::optional<diffops::QuadraticSignature> sig;
      if (op_arg.find('x') != std::string::npos || cli::Catalog::builtin().find(op_arg)) {
        sig = diffops::superseeker_signature(resolve(op_arg));
      } else {
        Polynomial q = cli::parse_polynomial(op_arg, op_arg.find('T') != std::string::npos ? 'T' : 'n');
        sig = diffops::quadratic_signature(q);
      }
      if (!sig) {
        out.field("signature", "none (leading coefficient has no quadratic residual factor)");
        exit_code = kCheckFail;
        return;
      }
      print_signature(out, *sig);
    };
  });

  std::string cat_action, cat_id;
  bool with_relations = false;
  auto* catalog = app.add_subcommand("catalog", "List, show or verify catalog entries");
  catalog->add_option("action", cat_action)->required()->check(CLI::IsMember({"list", "show", "verify-all"}));
  catalog->add_option("id", cat_id);
  catalog->add_flag("--relations", with_relations, "verify-all: also check equivalence relations");
  catalog->callback([&] {
    action = [&](const Printer& out) {
      const auto& cat = cli::Catalog::builtin();
      if (cat_action == "list") {
        for (const auto& e : cat.entries()) {
          std::string tags;
          for (const auto& t : e.tags) tags += (tags.empty() ? "" : ",") + t;
          if (e.corrected) tags += ",corrected";
          if (e.excluded) tags += ",excluded";
          out.field(e.id, tags.empty() ? "-" : tags);
        }
      } else if (cat_action == "show") {
        if (cat_id.empty()) throw CLI::ValidationError("catalog show needs an id");
        const auto& e = cat.get(cat_id);
        out.field("id", e.id);
        std::string aliases;
        for (const auto& a : e.aliases) aliases += (aliases.empty() ? "" : ",") + a;
        if (!aliases.empty()) out.field("aliases", aliases);
        out.field("source", e.source);
        std::string tags;
        for (const auto& t : e.tags) tags += (tags.empty() ? "" : ",") + t;
        if (!tags.empty()) out.field("tags", tags);
        if (e.corrected) out.field("corrected", "yes");
        if (e.excluded) out.field("excluded", "yes");
        if (e.q0) out.field("q0", exact::to_string(*e.q0, "n"));
        if (!e.printed.empty()) out.field("printed", e.printed);
        if (!e.notes.empty()) out.field("notes", e.notes);
        if (e.op) out.op("operator", *e.op);
        for (const auto& r : cat.relations())
          if (r.left == e.id || r.right == e.id) out.field("relation", r.kind + " " + r.left + " " + r.right);
      } else {
        exit_code = verify_catalog(out, with_relations, order);
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    action(Printer(format));
    return exit_code;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "cy: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "cy: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotFoundError& e) {
    std::cerr << "cy: " << e.what() << "\n";
    return kUsage;
  } catch (const StructuralError& e) {
    std::cerr << "cy: inconsistency: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "cy: precondition: " << e.what() << "\n";
    return kPrecondition;
  }
}
