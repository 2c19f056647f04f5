#pragma once

// Bounded exhaustive searches over invariant tuples (n, e, k, c[, r]).
//
// Every counting formula is linear in (k, c) once (n, e) is fixed, so a search
// walks the (n, e) window and solves a 2x2 system exactly for (k, c). The side
// constraints of the profile are then checked on the exact solution.

#include "trisecant/exact.hpp"
#include "trisecant/formulas.hpp"
#include "trisecant/polynomial.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace trisecant {

/// Upper end of the e-range for a given n.
enum class UpperEPolicy {
  castelnuovo_p4,  // 2 p(4) - n - 2, i.e. sectional genus <= p(4)
  castelnuovo_p5,  // 2 p(5) - n - 2
  harris_e_bound,  // ceil(n^2/5 - 2n)
};

/// Lower end of the e-range: e >= -n - 2 (sectional genus >= 0).
enum class LowerEPolicy { nonnegative_genus };

struct SearchWindow {
  int n_min = 0;
  int n_max = 0;
  LowerEPolicy e_lo_policy = LowerEPolicy::nonnegative_genus;
  UpperEPolicy e_hi_policy = UpperEPolicy::castelnuovo_p5;

  struct Range {
    Integer lo;
    Integer hi;
  };
  /// Inclusive e-range for n, or nullopt when the n-slice is empty.
  std::optional<Range> e_range(const Integer& n) const;
};

/// Which pair of linear equations determines (k, c).
enum class LinearSystem {
  d3_t3,            // d3 = 0, t3 = 4r (r = 0 unless the profile fixes it)
  d3_double_point,  // d3 = 0, double point formula of the projection = 0
};

enum class T3Mode { ignored, zero, four_r };
enum class S3Mode { ignored, six_minus_6r };

enum class Side {
  hodge,             // k n <= e^2
  miyaoka,           // k <= 3c
  noether,           // 12 | k + c
  parity,            // 2 | n + e
  chi_nonnegative,   // (k + c)/12 >= 0
  genus_bound,       // see GenusBound
  not_conic_bundle,  // n + 2e + k > 0
};

enum class GenusBound {
  none,
  castelnuovo_p4,   // g <= p(4), degenerate range guarded
  castelnuovo_p5,   // g <= p(5), degenerate range guarded
  harris_e_bound,   // (n + e)/2 <= p1, equivalently e <= n^2/5 - 2n
};

struct ConstraintProfile {
  std::string name;
  LinearSystem system = LinearSystem::d3_t3;
  T3Mode t3_mode = T3Mode::zero;
  S3Mode s3_mode = S3Mode::ignored;
  std::vector<Side> side;
  GenusBound genus = GenusBound::none;
  /// four_r with d3_double_point: r is read off as t3/4 and must be >= r_min.
  int r_min = 0;
};

std::string to_string(Side side);
std::string to_string(GenusBound bound);

/// Names of the profile checks the tuple satisfies, in profile order. Includes
/// the defining equations ("d3", "t3", "double_point", "s3") when they hold.
std::vector<std::string> satisfied_constraints(const ConstraintProfile& profile, const InvariantTuple& t);

/// True if t satisfies every equation and side constraint of the profile.
bool satisfies(const ConstraintProfile& profile, const InvariantTuple& t);

enum class RowFlag { matches_paper_table, extra_not_excluded };

std::string to_string(RowFlag flag);

struct EnumerationRow {
  InvariantTuple tuple;
  RowFlag flag = RowFlag::extra_not_excluded;
  /// Filled for extras: every profile constraint the tuple survives.
  std::vector<std::string> survives;
};

struct EnumerationResult {
  std::string profile;
  SearchWindow window;
  std::vector<EnumerationRow> rows;  // sorted by tuple
  /// Reference rows in the window that the search did not produce.
  std::vector<InvariantTuple> missing;

  std::vector<InvariantTuple> tuples() const;
  std::size_t extra_count() const;
};

struct EnumerationOptions {
  /// Worker threads for the n-slices; output does not depend on it.
  unsigned threads = 1;
  std::optional<int> n_min;
  std::optional<int> n_max;
};

/// Unique integral (k, c) with d3 = t3 = 0 at (n, e), if any.
std::optional<std::pair<Integer, Integer>> solve_kc_given_ne(const Integer& n, const Integer& e);

// Standard profiles and windows.
ConstraintProfile no_lines_small_profile();
ConstraintProfile no_lines_large_profile();
ConstraintProfile isolated_line_profile();
ConstraintProfile inner_projection_profile();
ConstraintProfile conjecture_scan_profile();

SearchWindow no_lines_small_window();
SearchWindow no_lines_large_window();
SearchWindow isolated_line_window();
SearchWindow inner_projection_window();
SearchWindow conjecture_scan_window();

/// Published candidate table for a profile name (empty for unknown names).
/// For conjecture-scan this is the union of the four tables; only the
/// inner-projection rows carry r.
std::vector<InvariantTuple> reference_table(const std::string& profile);

/// Row label of t in the published table of the profile: "(1)".."(4)" for the
/// small no-lines table, "(a)", "(b)", ... otherwise.
std::optional<std::string> reference_label(const std::string& profile, const InvariantTuple& t);

/// Reference row matches t on (n, e, k, c), and on r when the reference has one.
bool matches_reference(const InvariantTuple& reference, const InvariantTuple& t);

/// Runs a profile over a window. fixed_r applies to d3_t3 systems with
/// t3_mode four_r.
EnumerationResult run_profile(const ConstraintProfile& profile, const SearchWindow& window,
                              std::optional<int> fixed_r, const EnumerationOptions& options = {});

EnumerationResult enumerate_no_lines_small(const EnumerationOptions& options = {});
EnumerationResult enumerate_no_lines_large(const EnumerationOptions& options = {});
EnumerationResult enumerate_isolated_line(const EnumerationOptions& options = {});
EnumerationResult enumerate_inner_projection(const EnumerationOptions& options = {});

/// d3 after substituting e = n - 12, k = 24 - 3n, c = 3n - 12.
Polynomial conic_bundle_cubic();

/// Positive integer roots of conic_bundle_cubic().
std::vector<Integer> conic_bundle_degrees();

/// For each r in [0, r_max]: d3 = 0, t3 = 4r, s3 = 6 - 6r as hard constraints.
EnumerationResult conjecture_scan(int r_max, const EnumerationOptions& options = {});

}  // namespace trisecant
