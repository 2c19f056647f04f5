#include "trisecant/catalog.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace trisecant {

using nlohmann::json;

std::string to_string(Verification v) {
  switch (v) {
    case Verification::no_lines:
      return "no_lines";
    case Verification::isolated_line:
      return "isolated_line";
    case Verification::inner_projection:
      return "inner_projection";
    case Verification::conic_bundle:
      return "conic_bundle";
    case Verification::scroll:
      return "scroll";
  }
  return "unknown";
}

const CatalogEntry* Catalog::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::string default_catalog_path() { return TRISECANT_DEFAULT_CATALOG; }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class RowReader {
 public:
  RowReader(const json& node, std::string where) : node_(node), where_(std::move(where)) {}

  [[noreturn]] void fail(const std::string& what) const { throw CatalogError(where_ + ": " + what); }

  const json& field(const char* key) const {
    if (!node_.is_object()) fail("expected an object");
    auto it = node_.find(key);
    if (it == node_.end()) fail(std::string("missing field '") + key + "'");
    return *it;
  }

  bool has(const char* key) const { return node_.is_object() && node_.contains(key); }

  std::string string(const char* key) const {
    const json& v = field(key);
    if (!v.is_string()) fail(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
  }

  long long integer(const json& v, const std::string& key) const {
    if (!v.is_number_integer()) fail("field '" + key + "' must be an integer");
    return v.get<long long>();
  }

  long long integer(const char* key) const { return integer(field(key), key); }

  std::vector<std::string> strings(const char* key) const {
    const json& v = field(key);
    if (!v.is_array()) fail(std::string("field '") + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& s : v) {
      if (!s.is_string()) fail(std::string("field '") + key + "' must contain strings");
      out.push_back(s.get<std::string>());
    }
    return out;
  }

  const std::string& where() const { return where_; }

 private:
  const json& node_;
  std::string where_;
};

InvariantTuple read_invariants(const RowReader& row) {
  const json& v = row.field("invariants");
  RowReader r(v, row.where() + " invariants");
  InvariantTuple t{r.integer("n"), r.integer("e"), r.integer("k"), r.integer("c"), std::nullopt};
  if (r.has("r")) t.r = Integer(r.integer("r"));
  return t;
}

Polarization read_lattice(const RowReader& row, const json& ls) {
  RowReader r(ls, row.where() + " linear_system");
  RowReader model_reader(r.field("model"), row.where() + " linear_system.model");
  const std::string base = model_reader.string("base");
  const long long m = model_reader.integer("m");
  if (m < 0 || m > 64) model_reader.fail("m out of range");
  SurfaceModel model;
  if (base == "plane") {
    model = SurfaceModel::plane(static_cast<int>(m));
  } else if (base == "quadric") {
    model = SurfaceModel::quadric(static_cast<int>(m));
  } else {
    model_reader.fail("base must be 'plane' or 'quadric'");
  }
  const json& h = r.field("H");
  if (!h.is_array()) r.fail("H must be an integer array");
  DivisorClass H;
  for (const auto& c : h) H.coeffs.push_back(r.integer(c, "H"));
  try {
    return make_polarization(model, std::move(H));
  } catch (const std::invalid_argument& e) {
    r.fail(e.what());
  }
}

Verification read_verification(const RowReader& row) {
  const std::string v = row.string("verification");
  for (Verification c : {Verification::no_lines, Verification::isolated_line, Verification::inner_projection,
                         Verification::conic_bundle, Verification::scroll}) {
    if (to_string(c) == v) return c;
  }
  row.fail("unknown verification class '" + v + "'");
}

TableClaim read_claim(const RowReader& r) { return {r.string("table"), r.string("row")}; }

void check_claim_names(const RowReader& r, const TableClaim& claim) {
  if (reference_table(claim.table).empty() || claim.table == "conjecture-scan") {
    r.fail("unknown table '" + claim.table + "'");
  }
}

CatalogEntry read_entry(const json& node, std::size_t index) {
  std::string where = "catalog row " + std::to_string(index + 1);
  if (node.is_object() && node.contains("name") && node["name"].is_string()) {
    where += " (\"" + node["name"].get<std::string>() + "\")";
  }
  RowReader row(node, where);
  CatalogEntry e;
  e.name = row.string("name");
  e.degree = static_cast<int>(row.integer("degree"));
  if (row.has("degrees")) {
    const json& ds = row.field("degrees");
    if (!ds.is_array() || ds.empty()) row.fail("field 'degrees' must be a nonempty integer array");
    for (const auto& d : ds) e.degrees.push_back(static_cast<int>(row.integer(d, "degrees")));
    if (std::find(e.degrees.begin(), e.degrees.end(), e.degree) == e.degrees.end()) {
      row.fail("'degrees' does not contain 'degree'");
    }
  } else {
    e.degrees = {e.degree};
  }

  const json& ls = row.field("linear_system");
  RowReader ls_reader(ls, where + " linear_system");
  e.linear_system = ls_reader.string("text");
  if (ls_reader.has("model") || ls_reader.has("H")) e.lattice = read_lattice(row, ls);

  e.invariants = read_invariants(row);
  e.chi = row.integer("chi");
  e.example_ref = row.strings("example_ref");

  RowReader li(row.field("lines_info"), where + " lines_info");
  const std::string kind = li.string("kind");
  if (kind == "none") {
    e.lines_info.kind = LinesInfo::Kind::none;
  } else if (kind == "count") {
    e.lines_info.kind = LinesInfo::Kind::count;
    e.lines_info.count = static_cast<int>(li.integer("count"));
    if (e.lines_info.count < 1) li.fail("count must be positive");
  } else if (kind == "family") {
    e.lines_info.kind = LinesInfo::Kind::family;
  } else {
    li.fail("kind must be 'none', 'count' or 'family'");
  }

  const json& cut = row.field("cut_by_quadrics");
  if (cut.is_boolean()) {
    e.cut_by_quadrics = cut.get<bool>();
  } else if (!(cut.is_string() && cut.get<std::string>() == "unknown")) {
    row.fail("field 'cut_by_quadrics' must be a boolean or \"unknown\"");
  }

  e.exclusions = row.strings("exclusions");
  e.verification = read_verification(row);
  const json& tables = row.field("tables");
  if (!tables.is_array()) row.fail("field 'tables' must be an array");
  for (const auto& t : tables) {
    RowReader tr(t, where + " tables");
    TableClaim claim = read_claim(tr);
    check_claim_names(tr, claim);
    e.tables.push_back(std::move(claim));
  }
  e.ambient = static_cast<int>(row.integer("ambient"));
  if (e.ambient != 5 && e.ambient != 6) row.fail("ambient must be 5 or 6");
  if (e.verification == Verification::inner_projection && !e.invariants.r) {
    row.fail("inner_projection entries need invariants.r");
  }
  return e;
}

ExcludedCandidate read_excluded(const json& node, std::size_t index) {
  RowReader row(node, "excluded candidate " + std::to_string(index + 1));
  ExcludedCandidate x;
  x.id = row.string("id");
  x.claim = read_claim(row);
  check_claim_names(row, x.claim);
  x.invariants = read_invariants(row);
  x.reason = row.string("reason");
  return x;
}

}  // namespace

Catalog parse_catalog(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CatalogError(std::string("catalog is not valid JSON: ") + e.what());
  }
  RowReader top(doc, "catalog");
  if (top.integer("schema_version") != 1) top.fail("unsupported schema_version");
  const json& entries = top.field("entries");
  if (!entries.is_array()) top.fail("field 'entries' must be an array");
  Catalog cat;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CatalogEntry e = read_entry(entries[i], i);
    if (cat.find(e.name)) throw CatalogError("catalog row " + std::to_string(i + 1) + ": duplicate name '" + e.name + "'");
    cat.entries.push_back(std::move(e));
  }
  if (doc.contains("excluded_candidates")) {
    const json& xs = doc["excluded_candidates"];
    if (!xs.is_array()) top.fail("field 'excluded_candidates' must be an array");
    for (std::size_t i = 0; i < xs.size(); ++i) cat.excluded.push_back(read_excluded(xs[i], i));
  }
  return cat;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

// ---------------------------------------------------------------------------
// Verification

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed || c.exempt; });
}

namespace {

void add_check(VerificationReport& r, std::string name, bool ok, std::string detail, bool exemptable = false) {
  r.checks.push_back({std::move(name), ok, !ok && exemptable, std::move(detail)});
}

std::string eq_detail(const std::string& label, const Integer& value, const Integer& expected) {
  return label + " = " + to_string(value) + ", expected " + to_string(expected);
}

}  // namespace

VerificationReport verify_entry(const CatalogEntry& entry) {
  VerificationReport r;
  r.entry = entry.name;
  const InvariantTuple& t = entry.invariants;

  add_check(r, "degree", Integer(entry.degree) == t.n, eq_detail("n", t.n, entry.degree));
  add_check(r, "noether", t.k + t.c == 12 * entry.chi, eq_detail("k + c", t.k + t.c, 12 * entry.chi));
  add_check(r, "parity", is_even(t.n + t.e), "n + e = " + to_string(Integer(t.n + t.e)));
  if (entry.lattice) {
    const InvariantTuple got = invariants_of(*entry.lattice, entry.chi);
    const bool same = got.n == t.n && got.e == t.e && got.k == t.k && got.c == t.c;
    add_check(r, "lattice", same, "invariants_of = " + got.str() + ", stored " + t.str());
  }

  // P^6 constraints are waived for surfaces spanning only P^5.
  const bool waivable = entry.ambient == 5;
  switch (entry.verification) {
    case Verification::scroll:
      break;
    case Verification::no_lines:
      add_check(r, "d3", d3(t) == 0, eq_detail("d3", d3(t), 0), waivable);
      add_check(r, "t3", t3(t) == 0, eq_detail("t3", t3(t), 0), waivable);
      break;
    case Verification::isolated_line:
    case Verification::inner_projection:
      add_check(r, "d3", d3(t) == 0, eq_detail("d3", d3(t), 0), waivable);
      add_check(r, "double_point", double_point_p4(t) == 0, eq_detail("double_point", double_point_p4(t), 0),
                waivable);
      if (entry.verification == Verification::inner_projection) {
        const Integer lines = t.r.value_or(-1);
        add_check(r, "t3", t3(t) == 4 * lines, eq_detail("t3", t3(t), 4 * lines), waivable);
        add_check(r, "s3", s3(t) == 6 - 6 * lines, eq_detail("s3", s3(t), 6 - 6 * lines), waivable);
        if (entry.lines_info.kind == LinesInfo::Kind::count) {
          add_check(r, "line_count", Integer(entry.lines_info.count) == lines,
                    eq_detail("lines", entry.lines_info.count, lines));
        }
      }
      break;
    case Verification::conic_bundle:
      add_check(r, "d3", d3(t) == 0, eq_detail("d3", d3(t), 0), waivable);
      add_check(r, "adjoint_square", t.n + 2 * t.e + t.k == 0, eq_detail("n + 2e + k", t.n + 2 * t.e + t.k, 0),
                waivable);
      break;
  }

  for (const auto& claim : entry.tables) {
    const auto label = reference_label(claim.table, t);
    add_check(r, "table " + claim.table + " " + claim.row, label && *label == claim.row,
              label ? "tuple is row " + *label : "tuple is not in table " + claim.table);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Cross-check

std::vector<std::string> CrossCheckReport::excluded_rows(const std::string& table) const {
  std::vector<std::string> out;
  for (const auto& m : mappings) {
    if (m.table == table && m.target == Mapping::Target::exclusion) out.push_back(m.row);
  }
  return out;
}

CrossCheckReport cross_check_tables(const std::vector<EnumerationResult>& results, const Catalog& catalog) {
  CrossCheckReport report;
  std::map<std::string, const EnumerationResult*> by_table;
  for (const auto& res : results) by_table[res.profile] = &res;

  auto same_tuple = [](const InvariantTuple& a, const InvariantTuple& b) {
    return a.n == b.n && a.e == b.e && a.k == b.k && a.c == b.c;
  };

  for (const auto& res : results) {
    for (const auto& row : res.rows) {
      Mapping m;
      m.table = res.profile;
      m.tuple = row.tuple;
      m.row = reference_label(res.profile, row.tuple).value_or("");
      const TableClaim claim{m.table, m.row};
      if (!m.row.empty()) {
        for (const auto& e : catalog.entries) {
          if (std::find(e.tables.begin(), e.tables.end(), claim) != e.tables.end() &&
              same_tuple(e.invariants, row.tuple)) {
            m.target = Mapping::Target::entry;
            m.target_name = e.name;
            break;
          }
        }
        if (m.target == Mapping::Target::none) {
          for (const auto& x : catalog.excluded) {
            if (x.claim == claim && same_tuple(x.invariants, row.tuple)) {
              m.target = Mapping::Target::exclusion;
              m.target_name = x.id;
              break;
            }
          }
        }
      }
      if (m.target == Mapping::Target::none) {
        report.errors.push_back("unmapped row " + m.table + " " + (m.row.empty() ? "(extra)" : m.row) + " " +
                                row.tuple.str());
      }
      report.mappings.push_back(std::move(m));
    }
  }

  auto claim_present = [&](const TableClaim& claim, const InvariantTuple& t) {
    auto it = by_table.find(claim.table);
    if (it == by_table.end()) return true;  // table not supplied
    return std::any_of(it->second->rows.begin(), it->second->rows.end(), [&](const EnumerationRow& row) {
      return same_tuple(row.tuple, t) && reference_label(claim.table, row.tuple) == claim.row;
    });
  };
  for (const auto& e : catalog.entries) {
    for (const auto& claim : e.tables) {
      if (!claim_present(claim, e.invariants)) {
        report.errors.push_back("catalog entry '" + e.name + "' claims " + claim.table + " " + claim.row +
                                ", which the search did not produce");
      }
    }
  }
  for (const auto& x : catalog.excluded) {
    if (!claim_present(x.claim, x.invariants)) {
      report.errors.push_back("exclusion '" + x.id + "' claims " + x.claim.table + " " + x.claim.row +
                              ", which the search did not produce");
    }
  }
  return report;
}

}  // namespace trisecant
