#include "trisecant/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace trisecant {

namespace names {
constexpr const char* no_lines_small = "no-lines-small";
constexpr const char* no_lines_large = "no-lines-large";
constexpr const char* isolated_line = "isolated-line";
constexpr const char* inner_projection = "inner-projection";
constexpr const char* conjecture_scan = "conjecture-scan";
}  // namespace names

std::optional<SearchWindow::Range> SearchWindow::e_range(const Integer& n) const {
  Range range;
  range.lo = -n - 2;
  switch (e_hi_policy) {
    case UpperEPolicy::castelnuovo_p4:
    case UpperEPolicy::castelnuovo_p5: {
      const int ambient = e_hi_policy == UpperEPolicy::castelnuovo_p4 ? 4 : 5;
      auto ceiling = genus_ceiling(n, ambient);
      if (!ceiling) return std::nullopt;
      range.hi = 2 * *ceiling - n - 2;
      break;
    }
    case UpperEPolicy::harris_e_bound:
      range.hi = ceil(Rational(n * n, 5) - 2 * n);
      break;
  }
  if (range.hi < range.lo) return std::nullopt;
  return range;
}

std::string to_string(Side side) {
  switch (side) {
    case Side::hodge:
      return "hodge";
    case Side::miyaoka:
      return "miyaoka";
    case Side::noether:
      return "noether";
    case Side::parity:
      return "parity";
    case Side::chi_nonnegative:
      return "chi_nonnegative";
    case Side::genus_bound:
      return "genus_bound";
    case Side::not_conic_bundle:
      return "not_conic_bundle";
  }
  return "unknown";
}

std::string to_string(GenusBound bound) {
  switch (bound) {
    case GenusBound::none:
      return "none";
    case GenusBound::castelnuovo_p4:
      return "castelnuovo_p4";
    case GenusBound::castelnuovo_p5:
      return "castelnuovo_p5";
    case GenusBound::harris_e_bound:
      return "harris_p1";
  }
  return "unknown";
}

std::string to_string(RowFlag flag) {
  return flag == RowFlag::matches_paper_table ? "matches_paper_table" : "extra_not_excluded";
}

namespace {

bool genus_ok(GenusBound bound, const InvariantTuple& t) {
  if (!is_even(t.n + t.e)) return false;
  switch (bound) {
    case GenusBound::none:
      return true;
    case GenusBound::castelnuovo_p4:
    case GenusBound::castelnuovo_p5: {
      auto ceiling = genus_ceiling(t.n, bound == GenusBound::castelnuovo_p4 ? 4 : 5);
      return ceiling && sectional_genus(t.n, t.e) <= *ceiling;
    }
    case GenusBound::harris_e_bound:
      return Rational(t.n + t.e, 2) <= harris_p1(t.n);
  }
  return false;
}

bool side_ok(Side side, GenusBound bound, const InvariantTuple& t) {
  switch (side) {
    case Side::hodge:
      return t.k * t.n <= t.e * t.e;
    case Side::miyaoka:
      return t.k <= 3 * t.c;
    case Side::noether:
      return divides(12, t.k + t.c);
    case Side::parity:
      return is_even(t.n + t.e);
    case Side::chi_nonnegative:
      return t.k + t.c >= 0;
    case Side::genus_bound:
      return genus_ok(bound, t);
    case Side::not_conic_bundle:
      return t.n + 2 * t.e + t.k > 0;
  }
  return false;
}

// Equation checks in profile order: (name, holds).
std::vector<std::pair<std::string, bool>> equation_checks(const ConstraintProfile& p, const InvariantTuple& t) {
  std::vector<std::pair<std::string, bool>> out;
  out.emplace_back("d3", d3(t) == 0);
  if (p.system == LinearSystem::d3_double_point) out.emplace_back("double_point", double_point_p4(t) == 0);
  switch (p.t3_mode) {
    case T3Mode::ignored:
      break;
    case T3Mode::zero:
      out.emplace_back("t3", t3(t) == 0);
      break;
    case T3Mode::four_r:
      out.emplace_back("t3", t.r.has_value() && *t.r >= p.r_min && t3(t) == 4 * *t.r);
      break;
  }
  if (p.s3_mode == S3Mode::six_minus_6r) {
    out.emplace_back("s3", t.r.has_value() && s3(t) == 6 - 6 * *t.r);
  }
  return out;
}

}  // namespace

std::vector<std::string> satisfied_constraints(const ConstraintProfile& profile, const InvariantTuple& t) {
  std::vector<std::string> out;
  for (const auto& [label, ok] : equation_checks(profile, t)) {
    if (ok) out.push_back(label);
  }
  for (Side s : profile.side) {
    if (side_ok(s, profile.genus, t)) {
      out.push_back(s == Side::genus_bound ? "genus_bound(" + to_string(profile.genus) + ")" : to_string(s));
    }
  }
  return out;
}

bool satisfies(const ConstraintProfile& profile, const InvariantTuple& t) {
  for (const auto& [label, ok] : equation_checks(profile, t)) {
    if (!ok) return false;
  }
  return std::all_of(profile.side.begin(), profile.side.end(),
                     [&](Side s) { return side_ok(s, profile.genus, t); });
}

std::vector<InvariantTuple> EnumerationResult::tuples() const {
  std::vector<InvariantTuple> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row.tuple);
  return out;
}

std::size_t EnumerationResult::extra_count() const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const EnumerationRow& r) { return r.flag == RowFlag::extra_not_excluded; }));
}

std::optional<std::pair<Integer, Integer>> solve_kc_given_ne(const Integer& n, const Integer& e) {
  if (n < 1) throw DomainError("solve_kc_given_ne: requires n >= 1");
  auto kc = solve_linear_kc(d3_affine(n, e), 0, t3_affine(n, e), 0);
  if (!kc) return std::nullopt;
  auto k = as_integer(kc->k);
  auto c = as_integer(kc->c);
  if (!k || !c) return std::nullopt;
  return std::make_pair(*k, *c);
}

// ---------------------------------------------------------------------------
// Standard profiles

namespace {

const std::vector<Side> kAllSides = {Side::parity, Side::noether, Side::miyaoka, Side::hodge, Side::genus_bound};

}  // namespace

ConstraintProfile no_lines_small_profile() {
  ConstraintProfile p;
  p.name = names::no_lines_small;
  p.system = LinearSystem::d3_t3;
  p.t3_mode = T3Mode::zero;
  p.side = kAllSides;
  // Surfaces spanning P^5 are admitted, so the hyperplane curve only has to span P^4.
  p.genus = GenusBound::castelnuovo_p4;
  return p;
}

ConstraintProfile no_lines_large_profile() {
  ConstraintProfile p;
  p.name = names::no_lines_large;
  p.system = LinearSystem::d3_t3;
  p.t3_mode = T3Mode::zero;
  p.side = kAllSides;
  p.genus = GenusBound::harris_e_bound;
  return p;
}

ConstraintProfile isolated_line_profile() {
  ConstraintProfile p;
  p.name = names::isolated_line;
  p.system = LinearSystem::d3_double_point;
  p.t3_mode = T3Mode::ignored;
  // Miyaoka is not imposed: the candidate table keeps (8,-8,5,-5), which breaks it.
  p.side = {Side::parity, Side::noether, Side::chi_nonnegative, Side::hodge, Side::genus_bound};
  p.genus = GenusBound::castelnuovo_p5;
  return p;
}

ConstraintProfile inner_projection_profile() {
  ConstraintProfile p;
  p.name = names::inner_projection;
  p.system = LinearSystem::d3_double_point;
  p.t3_mode = T3Mode::four_r;
  p.s3_mode = S3Mode::six_minus_6r;
  p.side = kAllSides;
  p.side.push_back(Side::not_conic_bundle);
  p.genus = GenusBound::castelnuovo_p5;
  p.r_min = 1;
  return p;
}

ConstraintProfile conjecture_scan_profile() {
  ConstraintProfile p = inner_projection_profile();
  p.name = names::conjecture_scan;
  p.system = LinearSystem::d3_t3;
  p.r_min = 0;
  return p;
}

SearchWindow no_lines_small_window() { return {4, 11, LowerEPolicy::nonnegative_genus, UpperEPolicy::castelnuovo_p4}; }
SearchWindow no_lines_large_window() { return {12, 27, LowerEPolicy::nonnegative_genus, UpperEPolicy::harris_e_bound}; }
SearchWindow isolated_line_window() { return {4, 27, LowerEPolicy::nonnegative_genus, UpperEPolicy::castelnuovo_p5}; }
SearchWindow inner_projection_window() { return {4, 15, LowerEPolicy::nonnegative_genus, UpperEPolicy::castelnuovo_p5}; }
SearchWindow conjecture_scan_window() { return {4, 27, LowerEPolicy::nonnegative_genus, UpperEPolicy::castelnuovo_p5}; }

// ---------------------------------------------------------------------------
// Published tables

namespace {

InvariantTuple tup(int n, int e, int k, int c) { return {n, e, k, c, std::nullopt}; }
InvariantTuple tup(int n, int e, int k, int c, int r) { return {n, e, k, c, Integer(r)}; }

const std::vector<InvariantTuple>& small_table() {
  static const std::vector<InvariantTuple> t = {tup(4, -6, 9, 3), tup(8, -4, 2, 10), tup(8, 0, 0, 24),
                                                tup(10, 0, 0, 24)};
  return t;
}

const std::vector<InvariantTuple>& large_table() {
  static const std::vector<InvariantTuple> t = {tup(12, -2, -3, 3), tup(12, 0, -2, 14), tup(12, 2, -1, 25),
                                                tup(12, 4, 0, 36),  tup(14, 0, 0, 0),   tup(16, 16, 16, 80),
                                                tup(20, 40, 70, 206)};
  return t;
}

const std::vector<InvariantTuple>& isolated_table() {
  static const std::vector<InvariantTuple> t = {tup(8, -8, 5, -5), tup(8, -4, 1, 11), tup(9, -3, -1, 13),
                                                tup(10, -2, -2, 14), tup(11, 1, -1, 25)};
  return t;
}

const std::vector<InvariantTuple>& inner_table() {
  static const std::vector<InvariantTuple> t = {tup(8, -4, 1, 11, 8), tup(9, -3, -1, 13, 9),
                                                tup(10, -2, -2, 14, 6), tup(11, 1, -1, 25, 1)};
  return t;
}

}  // namespace

std::vector<InvariantTuple> reference_table(const std::string& profile) {
  if (profile == names::no_lines_small) return small_table();
  if (profile == names::no_lines_large) return large_table();
  if (profile == names::isolated_line) return isolated_table();
  if (profile == names::inner_projection) return inner_table();
  if (profile == names::conjecture_scan) {
    std::vector<InvariantTuple> all;
    for (const auto* t : {&small_table(), &large_table(), &isolated_table(), &inner_table()}) {
      all.insert(all.end(), t->begin(), t->end());
    }
    return all;
  }
  return {};
}

std::optional<std::string> reference_label(const std::string& profile, const InvariantTuple& t) {
  if (profile == names::conjecture_scan) return std::nullopt;
  const auto table = reference_table(profile);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (matches_reference(table[i], t)) {
      if (profile == names::no_lines_small) return "(" + std::to_string(i + 1) + ")";
      return std::string("(") + static_cast<char>('a' + i) + ")";
    }
  }
  return std::nullopt;
}

bool matches_reference(const InvariantTuple& reference, const InvariantTuple& t) {
  return reference.n == t.n && reference.e == t.e && reference.k == t.k && reference.c == t.c &&
         (!reference.r || reference.r == t.r);
}

// ---------------------------------------------------------------------------
// Search driver

namespace {

std::optional<InvariantTuple> solve_cell(const ConstraintProfile& profile, const Integer& n, const Integer& e,
                                         std::optional<int> fixed_r) {
  std::optional<KC> kc;
  Integer r = fixed_r.value_or(0);
  switch (profile.system) {
    case LinearSystem::d3_t3:
      kc = solve_linear_kc(d3_affine(n, e), 0, t3_affine(n, e), profile.t3_mode == T3Mode::four_r ? Integer(4 * r) : Integer(0));
      break;
    case LinearSystem::d3_double_point:
      kc = solve_linear_kc(d3_affine(n, e), 0, double_point_affine(n, e), 0);
      break;
  }
  if (!kc) return std::nullopt;
  auto k = as_integer(kc->k);
  auto c = as_integer(kc->c);
  if (!k || !c) return std::nullopt;
  InvariantTuple t{n, e, *k, *c, std::nullopt};
  if (profile.t3_mode == T3Mode::four_r) {
    if (profile.system == LinearSystem::d3_t3) {
      t.r = r;
    } else {
      const Integer tangential = t3(t);
      if (tangential % 4 != 0) return std::nullopt;
      t.r = tangential / 4;
    }
  }
  return t;
}

void search_slice(const ConstraintProfile& profile, const SearchWindow& window, int n,
                  std::optional<int> fixed_r, std::vector<InvariantTuple>& out) {
  const Integer nn = n;
  auto range = window.e_range(nn);
  if (!range) return;
  for (Integer e = range->lo; e <= range->hi; ++e) {
    auto t = solve_cell(profile, nn, e, fixed_r);
    if (t && satisfies(profile, *t)) out.push_back(std::move(*t));
  }
}

}  // namespace

EnumerationResult run_profile(const ConstraintProfile& profile, const SearchWindow& window_in,
                              std::optional<int> fixed_r, const EnumerationOptions& options) {
  SearchWindow window = window_in;
  if (options.n_min) window.n_min = *options.n_min;
  if (options.n_max) window.n_max = *options.n_max;
  if (window.n_min < 1) throw DomainError("search window: n_min must be at least 1");
  if (window.n_min > window.n_max) throw DomainError("search window: n_min exceeds n_max");
  if (profile.t3_mode == T3Mode::four_r && profile.system == LinearSystem::d3_t3 && !fixed_r) {
    throw std::invalid_argument("run_profile: profile " + profile.name + " needs a fixed r");
  }

  std::vector<InvariantTuple> found;
  const unsigned workers = std::max(1u, options.threads);
  if (workers == 1) {
    for (int n = window.n_min; n <= window.n_max; ++n) search_slice(profile, window, n, fixed_r, found);
  } else {
    std::vector<std::vector<InvariantTuple>> partial(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int n = window.n_min + static_cast<int>(w); n <= window.n_max; n += static_cast<int>(workers)) {
          search_slice(profile, window, n, fixed_r, partial[w]);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& p : partial) found.insert(found.end(), p.begin(), p.end());
  }
  std::sort(found.begin(), found.end());

  EnumerationResult result;
  result.profile = profile.name;
  result.window = window;
  const auto reference = reference_table(profile.name);
  for (auto& t : found) {
    EnumerationRow row;
    const bool known = std::any_of(reference.begin(), reference.end(),
                                   [&](const InvariantTuple& ref) { return matches_reference(ref, t); });
    row.flag = known ? RowFlag::matches_paper_table : RowFlag::extra_not_excluded;
    if (!known) row.survives = satisfied_constraints(profile, t);
    row.tuple = std::move(t);
    result.rows.push_back(std::move(row));
  }
  if (profile.name != names::conjecture_scan) {
    for (const auto& ref : reference) {
      if (ref.n < window.n_min || ref.n > window.n_max) continue;
      const bool seen = std::any_of(result.rows.begin(), result.rows.end(),
                                    [&](const EnumerationRow& row) { return matches_reference(ref, row.tuple); });
      if (!seen) result.missing.push_back(ref);
    }
  }
  return result;
}

EnumerationResult enumerate_no_lines_small(const EnumerationOptions& options) {
  return run_profile(no_lines_small_profile(), no_lines_small_window(), std::nullopt, options);
}

EnumerationResult enumerate_no_lines_large(const EnumerationOptions& options) {
  return run_profile(no_lines_large_profile(), no_lines_large_window(), std::nullopt, options);
}

EnumerationResult enumerate_isolated_line(const EnumerationOptions& options) {
  return run_profile(isolated_line_profile(), isolated_line_window(), std::nullopt, options);
}

EnumerationResult enumerate_inner_projection(const EnumerationOptions& options) {
  return run_profile(inner_projection_profile(), inner_projection_window(), std::nullopt, options);
}

Polynomial conic_bundle_cubic() {
  const Polynomial n = Polynomial::variable();
  return expr::d3<Polynomial>(n, n - Polynomial(12), Polynomial(24) - Polynomial(3) * n,
                              Polynomial(3) * n - Polynomial(12));
}

std::vector<Integer> conic_bundle_degrees() {
  std::vector<Integer> out;
  for (const Integer& root : conic_bundle_cubic().integer_roots()) {
    if (root > 0) out.push_back(root);
  }
  return out;
}

EnumerationResult conjecture_scan(int r_max, const EnumerationOptions& options) {
  if (r_max < 0) throw DomainError("conjecture_scan: r_max must be nonnegative");
  const ConstraintProfile profile = conjecture_scan_profile();
  EnumerationResult merged;
  for (int r = 0; r <= r_max; ++r) {
    EnumerationResult part = run_profile(profile, conjecture_scan_window(), r, options);
    if (r == 0) {
      merged.profile = part.profile;
      merged.window = part.window;
    }
    for (auto& row : part.rows) merged.rows.push_back(std::move(row));
  }
  std::sort(merged.rows.begin(), merged.rows.end(),
            [](const EnumerationRow& a, const EnumerationRow& b) { return a.tuple < b.tuple; });
  return merged;
}

}  // namespace trisecant
