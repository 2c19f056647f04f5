#include <gtest/gtest.h>

#include "trisecant/catalog.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

using namespace trisecant;

namespace {

std::string catalog_text() {
  std::ifstream in(std::string(TRISECANT_DATA_DIR) + "/catalog.json");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const Catalog& shipped() {
  static const Catalog cat = load_catalog(std::string(TRISECANT_DATA_DIR) + "/catalog.json");
  return cat;
}

std::vector<EnumerationResult> published_results() {
  return {enumerate_no_lines_small(), enumerate_no_lines_large(), enumerate_isolated_line(),
          enumerate_inner_projection()};
}

std::string parse_error(const std::string& text) {
  try {
    parse_catalog(text);
  } catch (const CatalogError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Catalog, DefaultPathLoads) {
  EXPECT_NO_THROW(load_catalog(default_catalog_path()));
  EXPECT_THROW(load_catalog("/nonexistent/catalog.json"), CatalogError);
}

TEST(Catalog, EveryClassificationRowLoads) {
  const auto& cat = shipped();
  EXPECT_EQ(cat.entries.size(), 19u);
  EXPECT_EQ(cat.excluded.size(), 3u);
}

TEST(Catalog, DegreeColumn) {
  const std::vector<std::pair<std::string, int>> expected = {
      {"P2", 4},
      {"Rational scrolls", 5},
      {"Elliptic scrolls", 7},
      {"Del Pezzo", 6},
      {"Bl7(P2)", 8},
      {"Conic bundle 6", 6},
      {"Conic bundle 7", 7},
      {"Conic bundle 8", 8},
      {"Bl8(P2)", 8},
      {"K3 complete intersection", 8},
      {"Bl9(P1xP1)", 9},
      {"Bl11(P2) degree 10", 10},
      {"K3 degree 10", 10},
      {"Bl1(K3) degree 11", 11},
      {"Bl11(P2) degree 12", 12},
      {"Bl1(K3) degree 12", 12},
      {"Elliptic", 12},
      {"Abelian", 14},
      {"General type", 16}};
  const auto& cat = shipped();
  ASSERT_EQ(cat.entries.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(cat.entries[i].name, expected[i].first);
    EXPECT_EQ(cat.entries[i].degree, expected[i].second) << expected[i].first;
  }
}

TEST(Catalog, SpotFields) {
  const auto& cat = shipped();
  const auto* abelian = cat.find("Abelian");
  ASSERT_NE(abelian, nullptr);
  EXPECT_EQ(abelian->degree, 14);
  EXPECT_EQ(abelian->linear_system, "(1,7)-polarization");
  EXPECT_EQ(abelian->cut_by_quadrics, false);
  EXPECT_EQ(abelian->chi, 0);

  const auto* k3 = cat.find("K3 complete intersection");
  ASSERT_NE(k3, nullptr);
  EXPECT_EQ(k3->degree, 8);
  EXPECT_EQ(k3->ambient, 5);

  const auto* p2 = cat.find("P2");
  ASSERT_NE(p2, nullptr);
  EXPECT_EQ(p2->degrees, (std::vector<int>{1, 4}));

  const auto* bl8 = cat.find("Bl8(P2)");
  ASSERT_NE(bl8, nullptr);
  EXPECT_EQ(bl8->invariants.r, Integer(8));
  EXPECT_EQ(bl8->verification, Verification::inner_projection);

  EXPECT_EQ(cat.find("no such surface"), nullptr);
}

TEST(Catalog, LatticeRowsRoundTrip) {
  std::size_t lattice_rows = 0;
  for (const auto& e : shipped().entries) {
    if (!e.lattice) continue;
    ++lattice_rows;
    const auto got = invariants_of(*e.lattice, e.chi);
    EXPECT_EQ(got.n, e.invariants.n) << e.name;
    EXPECT_EQ(got.e, e.invariants.e) << e.name;
    EXPECT_EQ(got.k, e.invariants.k) << e.name;
    EXPECT_EQ(got.c, e.invariants.c) << e.name;
  }
  EXPECT_GE(lattice_rows, 4u);
}

TEST(Catalog, EveryEntryVerifies) {
  for (const auto& e : shipped().entries) {
    const auto report = verify_entry(e);
    EXPECT_TRUE(report.passed()) << e.name;
    EXPECT_FALSE(report.checks.empty());
  }
}

TEST(Catalog, InjectedFaultFailsVerification) {
  CatalogEntry e = *shipped().find("Bl7(P2)");
  e.degree = 9;
  const auto report = verify_entry(e);
  EXPECT_FALSE(report.passed());
  const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                               [](const Check& c) { return c.name == "degree"; });
  ASSERT_NE(it, report.checks.end());
  EXPECT_FALSE(it->passed);
  EXPECT_FALSE(it->exempt);

  CatalogEntry wrong_c = *shipped().find("Elliptic");
  wrong_c.invariants.c += 12;
  wrong_c.chi += 1;  // keeps Noether, breaks d3 and t3
  EXPECT_FALSE(verify_entry(wrong_c).passed());

  CatalogEntry wrong_claim = *shipped().find("K3 degree 10");
  wrong_claim.tables = {{"no-lines-small", "(3)"}};
  EXPECT_FALSE(verify_entry(wrong_claim).passed());
}

TEST(Catalog, P5EntriesWaiveP6Checks) {
  CatalogEntry e = *shipped().find("K3 complete intersection");
  e.invariants.k += 12;
  e.invariants.c -= 12;
  e.tables.clear();
  const auto report = verify_entry(e);
  EXPECT_TRUE(report.passed());
  EXPECT_TRUE(std::any_of(report.checks.begin(), report.checks.end(), [](const Check& c) { return c.exempt; }));
  e.ambient = 6;
  EXPECT_FALSE(verify_entry(e).passed());
}

TEST(Catalog, SchemaErrorsNameTheRow) {
  auto doc = nlohmann::json::parse(catalog_text());
  doc["entries"][4].erase("degree");
  const std::string msg = parse_error(doc.dump());
  EXPECT_NE(msg.find("catalog row 5"), std::string::npos) << msg;
  EXPECT_NE(msg.find("Bl7(P2)"), std::string::npos) << msg;
  EXPECT_NE(msg.find("degree"), std::string::npos) << msg;

  auto bad_type = nlohmann::json::parse(catalog_text());
  bad_type["entries"][0]["chi"] = "one";
  EXPECT_NE(parse_error(bad_type.dump()).find("chi"), std::string::npos);

  auto dup = nlohmann::json::parse(catalog_text());
  dup["entries"][1]["name"] = "P2";
  EXPECT_NE(parse_error(dup.dump()).find("duplicate"), std::string::npos);

  EXPECT_NE(parse_error("{not json").find("not valid JSON"), std::string::npos);
  EXPECT_NE(parse_error(R"({"schema_version": 2, "entries": []})").find("schema_version"), std::string::npos);
}

TEST(Catalog, CrossCheckIsTotal) {
  const auto report = cross_check_tables(published_results(), shipped());
  EXPECT_TRUE(report.total());
  for (const auto& err : report.errors) ADD_FAILURE() << err;
  EXPECT_EQ(report.mappings.size(), 4u + 7u + 5u + 4u);
  for (const auto& m : report.mappings) EXPECT_NE(m.target, Mapping::Target::none) << m.table << " " << m.row;
  EXPECT_EQ(report.excluded_rows("no-lines-large"), (std::vector<std::string>{"(a)", "(g)"}));
  EXPECT_EQ(report.excluded_rows("isolated-line"), (std::vector<std::string>{"(a)"}));
  EXPECT_TRUE(report.excluded_rows("no-lines-small").empty());
  EXPECT_TRUE(report.excluded_rows("inner-projection").empty());
}

TEST(Catalog, CrossCheckMapsInnerProjectionRows) {
  const auto report = cross_check_tables(published_results(), shipped());
  std::vector<std::string> targets;
  for (const auto& m : report.mappings) {
    if (m.table == "inner-projection") targets.push_back(m.target_name);
  }
  EXPECT_EQ(targets,
            (std::vector<std::string>{"Bl8(P2)", "Bl9(P1xP1)", "Bl11(P2) degree 10", "Bl1(K3) degree 11"}));
}

TEST(Catalog, CrossCheckReportsUnmappedRowsAndDanglingClaims) {
  Catalog cat = shipped();
  cat.entries.erase(std::remove_if(cat.entries.begin(), cat.entries.end(),
                                   [](const CatalogEntry& e) { return e.name == "Elliptic"; }),
                    cat.entries.end());
  const auto missing_entry = cross_check_tables(published_results(), cat);
  EXPECT_FALSE(missing_entry.total());

  // A large search stopping below n = 20 leaves the row (g) exclusion dangling.
  const auto partial = cross_check_tables({enumerate_no_lines_large({.n_max = 19})}, shipped());
  ASSERT_EQ(partial.errors.size(), 1u);
  EXPECT_NE(partial.errors[0].find("quintic-four-secant"), std::string::npos) << partial.errors[0];

  // Tables that were not searched are not checked.
  EXPECT_TRUE(cross_check_tables({enumerate_no_lines_small()}, shipped()).total());
}
