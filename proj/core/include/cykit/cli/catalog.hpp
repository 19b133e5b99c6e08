#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cykit/exact/polynomial.hpp"
#include "cykit/opalg/operators.hpp"

namespace cykit::cli {

using exact::Polynomial;
using opalg::ThetaOperator;

struct CatalogEntry {
  std::string id;
  std::vector<std::string> aliases;
  /// Empty for table rows without an operator.
  std::optional<ThetaOperator> op;
  std::string source;
  /// The printed operator had a typo; `printed` keeps the printed reading
  /// and `notes` names the correction.
  bool corrected = false;
  /// Dropped from the count of CY equations (trivial or known equivalences).
  bool excluded = false;
  std::vector<std::string> tags;
  /// Quadratic factor Q_0(n) for recursion-table rows.
  std::optional<Polynomial> q0;
  std::string printed;
  std::string notes;

  bool has_tag(std::string_view tag) const;
};

/// `equivalent` relations claim equal K(q); `grid` and `reference` relations
/// carry opaque cross-reference text in `right`.
struct CatalogRelation {
  std::string kind;
  std::string left;
  std::string right;
  std::string note;
};

/// Versioned plain-text catalog. Entries are kept sorted by id.
class Catalog {
 public:
  /// Parses the `CYCAT 1` format. Throws ParseError.
  static Catalog parse(std::string_view text);
  static Catalog load(const std::filesystem::path& path);

  /// The seeded catalog compiled into the library, extended by the entries
  /// that are built from the families tables (second-order equations,
  /// Hadamard products, binomial lifts, hypergeometric quintics and the
  /// discriminant table rows). CYKIT_CATALOG may name a replacement file.
  static const Catalog& builtin();

  /// Looks up an id or alias. Throws NotFoundError listing near matches.
  const CatalogEntry& get(std::string_view key) const;
  const CatalogEntry* find(std::string_view key) const;

  std::span<const CatalogEntry> entries() const noexcept { return entries_; }
  std::span<const CatalogRelation> relations() const noexcept { return relations_; }

  void add(CatalogEntry entry);
  void add(CatalogRelation relation);

 private:
  void sort();
  std::vector<CatalogEntry> entries_;
  std::vector<CatalogRelation> relations_;
};

/// Serializes in the `CYCAT 1` format; parse(to_text(c)) reproduces c.
std::string to_text(const Catalog& catalog);

}  // namespace cykit::cli
