#pragma once

// Surface catalog: the classification table as data, plus the checks that tie
// each entry back to the formulas, the searches and the lattice models.

#include "trisecant/enumeration.hpp"
#include "trisecant/formulas.hpp"
#include "trisecant/picard.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace trisecant {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LinesInfo {
  enum class Kind { none, count, family };
  Kind kind = Kind::none;
  int count = 0;  // meaningful for Kind::count
};

enum class Verification {
  no_lines,          // d3 = t3 = 0
  isolated_line,     // d3 = 0, double point = 0
  inner_projection,  // isolated_line plus t3 = 4r, s3 = 6 - 6r
  conic_bundle,      // d3 = 0, n + 2e + k = 0
  scroll,            // schema only
};

std::string to_string(Verification v);

struct TableClaim {
  std::string table;  // profile name
  std::string row;    // "(2)", "(b)", ...

  friend bool operator==(const TableClaim&, const TableClaim&) = default;
};

struct CatalogEntry {
  std::string name;
  int degree = 0;
  /// Degrees of the whole table cell; {degree} for single-degree rows.
  std::vector<int> degrees;
  std::string linear_system;              // as printed in the table
  std::optional<Polarization> lattice;    // rational rows with a model
  InvariantTuple invariants;
  Integer chi;
  std::vector<std::string> example_ref;
  LinesInfo lines_info;
  std::optional<bool> cut_by_quadrics;    // nullopt = unknown
  std::vector<std::string> exclusions;    // general-position assumptions
  Verification verification = Verification::scroll;
  std::vector<TableClaim> tables;
  int ambient = 6;
};

struct ExcludedCandidate {
  std::string id;
  TableClaim claim;
  InvariantTuple invariants;
  std::string reason;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::vector<ExcludedCandidate> excluded;

  const CatalogEntry* find(const std::string& name) const;
};

/// Catalog shipped in data/.
std::string default_catalog_path();

/// Parses and validates; CatalogError names the offending row.
Catalog load_catalog(const std::string& path);
Catalog parse_catalog(const std::string& text);

struct Check {
  std::string name;
  bool passed = false;
  /// Waived: failed, but not applicable to a P^5 entry.
  bool exempt = false;
  std::string detail;
};

struct VerificationReport {
  std::string entry;
  std::vector<Check> checks;

  /// Every check passed or is exempt.
  bool passed() const;
};

VerificationReport verify_entry(const CatalogEntry& entry);

struct Mapping {
  enum class Target { entry, exclusion, none };
  std::string table;
  std::string row;  // empty for rows outside the published table
  InvariantTuple tuple;
  Target target = Target::none;
  std::string target_name;
};

struct CrossCheckReport {
  std::vector<Mapping> mappings;
  std::vector<std::string> errors;

  /// Every row mapped and no dangling catalog claims.
  bool total() const { return errors.empty(); }
  /// Rows of `table` mapped to exclusions, in table order.
  std::vector<std::string> excluded_rows(const std::string& table) const;
};

CrossCheckReport cross_check_tables(const std::vector<EnumerationResult>& results, const Catalog& catalog);

}  // namespace trisecant
