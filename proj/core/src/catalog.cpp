#include "cykit/cli/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cykit/cli/operator_text.hpp"
#include "cykit/diffops/difference.hpp"
#include "cykit/error.hpp"
#include "cykit/families/families.hpp"

namespace cykit::cli {

extern const char* const kCatalogText;

namespace {

using exact::Rational;

std::vector<std::string> split_words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string join(const std::vector<std::string>& words, const char* sep = " ") {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : sep) + w;
  return out;
}

std::string polynomial_record(const Polynomial& p) {
  std::string out;
  for (const auto& c : p.coefficients()) out += (out.empty() ? "" : " ") + exact::to_string(c);
  return out;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

class Reader {
 public:
  explicit Reader(std::string_view text) : in_{std::string(text)} {}

  Catalog read() {
    Catalog catalog;
    if (!next() || line_ != "CYCAT 1") fail("expected header 'CYCAT 1'");
    while (next()) {
      if (blank_or_comment()) continue;
      const auto [key, rest] = split_key();
      if (key == "entry")
        catalog.add(entry(rest));
      else if (key == "relation")
        catalog.add(relation(rest));
      else
        fail("expected 'entry' or 'relation', got '" + key + "'");
    }
    return catalog;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("catalog line " + std::to_string(line_no_) + ": " + what, offset_);
  }

  bool next() {
    offset_ = next_offset_;
    if (!std::getline(in_, line_)) return false;
    next_offset_ += line_.size() + 1;
    ++line_no_;
    if (!line_.empty() && line_.back() == '\r') line_.pop_back();
    return true;
  }

  bool blank_or_comment() const {
    const auto first = line_.find_first_not_of(" \t");
    return first == std::string::npos || line_[first] == '#';
  }

  std::pair<std::string, std::string> split_key() const {
    const auto sp = line_.find(' ');
    if (sp == std::string::npos) return {line_, ""};
    return {line_.substr(0, sp), line_.substr(sp + 1)};
  }

  CatalogEntry entry(const std::string& id) {
    if (id.empty() || id.find(' ') != std::string::npos) fail("entry id must be a single token");
    CatalogEntry e;
    e.id = id;
    while (next()) {
      if (blank_or_comment()) continue;
      const auto [key, rest] = split_key();
      if (key == "end") return e;
      if (key == "aliases") {
        e.aliases = split_words(rest);
      } else if (key == "source") {
        e.source = rest;
      } else if (key == "tags") {
        e.tags = split_words(rest);
      } else if (key == "flags") {
        for (const auto& f : split_words(rest)) {
          if (f == "corrected")
            e.corrected = true;
          else if (f == "excluded")
            e.excluded = true;
          else
            fail("unknown flag '" + f + "'");
        }
      } else if (key == "q0") {
        std::vector<Rational> coeffs;
        try {
          for (const auto& w : split_words(rest)) coeffs.push_back(exact::parse_rational(w));
        } catch (const Error&) {
          fail("bad q0 coefficient");
        }
        e.q0 = Polynomial(std::move(coeffs));
      } else if (key == "printed") {
        e.printed = rest;
      } else if (key == "note") {
        e.notes += (e.notes.empty() ? "" : " ") + rest;
      } else if (key == "operator") {
        e.op = operator_record();
      } else {
        fail("unknown entry field '" + key + "'");
      }
    }
    fail("entry '" + id + "' has no 'end'");
  }

  ThetaOperator operator_record() {
    std::string record;
    if (!next() || line_ != "CYOP 1") fail("expected 'CYOP 1' after 'operator'");
    record += line_ + "\n";
    if (!next()) fail("machine record ends early");
    record += line_ + "\n";
    const auto shape = split_words(line_);
    if (shape.size() != 4) fail("expected 'order k degree d'");
    const int d = std::stoi(shape[3]);
    for (int i = 0; i <= d; ++i) {
      if (!next()) fail("machine record ends early");
      record += line_ + "\n";
    }
    try {
      return parse_operator(record);
    } catch (const ParseError& err) {
      fail(err.what());
    }
  }

  CatalogRelation relation(const std::string& rest) {
    CatalogRelation r;
    std::string body = rest;
    if (const auto bar = body.find(" | "); bar != std::string::npos) {
      r.note = body.substr(bar + 3);
      body.resize(bar);
    }
    auto words = split_words(body);
    if (words.size() < 3) fail("relation needs a kind and two sides");
    r.kind = words[0];
    r.left = words[1];
    r.right = join(std::vector<std::string>(words.begin() + 2, words.end()));
    return r;
  }

  std::istringstream in_;
  std::string line_;
  std::size_t line_no_ = 0;
  std::size_t offset_ = 0;
  std::size_t next_offset_ = 0;
};

std::string two_digits(int i) { return (i < 10 ? "0" : "") + std::to_string(i); }

void add_family_entries(Catalog& catalog) {
  for (const auto& h : families::hyper_seconds()) {
    CatalogEntry e;
    e.id = "hyper-" + h.name;
    e.aliases = {"(" + h.name + ")"};
    e.op = families::second_order_operator(h).canonical();
    e.source = "hypergeometric second-order equation theta^2 - xQ(theta), row " + h.name;
    e.tags = {"second-order", "hypergeometric"};
    catalog.add(std::move(e));
  }
  for (const auto& s : families::degree_two_seconds()) {
    CatalogEntry e;
    e.id = "second-" + s.name;
    e.aliases = {"(" + s.name + ")"};
    e.op = families::second_order_operator(s).canonical();
    e.source = "second-degree second-order equation, row (" + s.name + ")";
    e.tags = {"second-order", "degree-2"};
    catalog.add(std::move(e));
  }
  for (const auto& h : families::hyper_seconds())
    for (const auto& s : families::degree_two_seconds()) {
      CatalogEntry e;
      e.id = "hadamard-" + h.name + "-" + s.name;
      e.aliases = {"(" + h.name + ")*(" + s.name + ")"};
      e.op = families::hadamard_product(h, s);
      e.source = "Hadamard product (" + h.name + ")*(" + s.name + ")";
      e.tags = {"hadamard", "degree-2"};
      e.excluded = families::hadamard_excluded(h, s);
      if (e.excluded)
        e.notes = s.name == "h" ? "trivial K(q) = 1" : "equivalent to #3, an equation of degree 1";
      catalog.add(std::move(e));
    }
  for (const auto& r : families::binom_lift_rows()) {
    CatalogEntry e;
    e.id = "binomlift-" + r.name;
    e.aliases = {r.big_table_id};
    e.op = families::binom_lift_third(r.p, r.c);
    e.source = "third-order equation " + r.name + " multiplied by C(2n,n)";
    e.tags = {"binomial-lift", "degree-2"};
    catalog.add(std::move(e));
  }
  for (const auto& r : families::tilde_rows()) {
    CatalogEntry e;
    e.id = "quintic-tilde-" + std::to_string(r.index);
    e.op = families::hypergeometric_quintic(r.spec);
    e.source = "hypergeometric fifth-order equation, parameter row " + std::to_string(r.index);
    e.tags = {"hypergeometric", "order-5"};
    catalog.add(std::move(e));
  }
  int i = 0;
  for (const auto& r : diffops::superseeker_table()) {
    CatalogEntry e;
    e.id = "superseeker-row-" + two_digits(++i);
    e.aliases = {};
    e.source = "discriminant table row |D| = " + r.printed_abs_d.get_str() + ", ids " + join(r.ids, ",");
    e.tags = {"superseeker"};
    e.q0 = r.q0;
    e.printed = r.q0_text;
    if (r.garbled) e.tags.push_back("garbled");
    if (!r.erratum.empty()) e.notes = "erratum: " + r.erratum;
    catalog.add(std::move(e));
  }
}

Catalog make_builtin() {
  Catalog c;
  if (const char* path = std::getenv("CYKIT_CATALOG"); path && *path)
    c = Catalog::load(path);
  else
    c = Catalog::parse(kCatalogText);
  add_family_entries(c);
  return c;
}

}  // namespace

bool CatalogEntry::has_tag(std::string_view tag) const { return std::find(tags.begin(), tags.end(), tag) != tags.end(); }

Catalog Catalog::parse(std::string_view text) { return Reader(text).read(); }

Catalog Catalog::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open catalog file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog = make_builtin();
  return catalog;
}

void Catalog::add(CatalogEntry entry) {
  if (find(entry.id)) throw StructuralError("duplicate catalog id '" + entry.id + "'");
  entries_.push_back(std::move(entry));
  sort();
}

void Catalog::add(CatalogRelation relation) { relations_.push_back(std::move(relation)); }

void Catalog::sort() {
  std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
}

const CatalogEntry* Catalog::find(std::string_view key) const {
  for (const auto& e : entries_)
    if (e.id == key) return &e;
  for (const auto& e : entries_)
    if (std::find(e.aliases.begin(), e.aliases.end(), key) != e.aliases.end()) return &e;
  return nullptr;
}

const CatalogEntry& Catalog::get(std::string_view key) const {
  if (const auto* e = find(key)) return *e;
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& e : entries_) {
    std::size_t best = edit_distance(key, e.id);
    for (const auto& a : e.aliases) best = std::min(best, edit_distance(key, a));
    if (e.id.find(key) != std::string::npos) best = 0;
    scored.emplace_back(best, e.id);
  }
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> near;
  for (const auto& [d, id] : scored)
    if (near.size() < 5 && d <= std::max<std::size_t>(2, key.size() / 3)) near.push_back(id);
  std::string msg = "no catalog entry '" + std::string(key) + "'";
  if (!near.empty()) msg += "; near matches: " + join(near, ", ");
  throw NotFoundError(msg);
}

std::string to_text(const Catalog& catalog) {
  std::ostringstream out;
  out << "CYCAT 1\n";
  for (const auto& e : catalog.entries()) {
    out << "\nentry " << e.id << "\n";
    if (!e.aliases.empty()) out << "aliases " << join(e.aliases) << "\n";
    if (!e.source.empty()) out << "source " << e.source << "\n";
    if (!e.tags.empty()) out << "tags " << join(e.tags) << "\n";
    std::vector<std::string> flags;
    if (e.corrected) flags.push_back("corrected");
    if (e.excluded) flags.push_back("excluded");
    if (!flags.empty()) out << "flags " << join(flags) << "\n";
    if (e.q0) out << "q0 " << polynomial_record(*e.q0) << "\n";
    if (!e.printed.empty()) out << "printed " << e.printed << "\n";
    if (!e.notes.empty()) out << "note " << e.notes << "\n";
    if (e.op) out << "operator\n" << render_operator(*e.op, RenderStyle::machine);
    out << "end\n";
  }
  if (!catalog.relations().empty()) out << "\n";
  for (const auto& r : catalog.relations()) {
    out << "relation " << r.kind << " " << r.left << " " << r.right;
    if (!r.note.empty()) out << " | " << r.note;
    out << "\n";
  }
  return out.str();
}

}  // namespace cykit::cli
