#pragma once

// Intersection theory on Pic of Bl_m(P^2) and Bl_m(P^1 x P^1).
//
// Coefficients are in the standard basis: (l; E_1..E_m) for the plane,
// (f_1, f_2; E_1..E_m) for the quadric. A class a l - 2 E_1 is stored as
// {a, -2, 0, ...}; the "multiplicity" convention a l - sum a_i E_i only appears
// in the named box helpers below.

#include "trisecant/formulas.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace trisecant {

enum class Base { plane, quadric };

struct SurfaceModel {
  Base base = Base::plane;
  int m = 0;

  static SurfaceModel plane(int m);
  static SurfaceModel quadric(int m);

  /// m + 1 (plane) or m + 2 (quadric).
  std::size_t rank() const;
  /// Index of E_1 in the coefficient vector.
  std::size_t e_offset() const;
  std::string str() const;

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

struct DivisorClass {
  std::vector<std::int64_t> coeffs;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(std::int64_t s, const DivisorClass& a);

// Basis elements; indices of E are 1-based, fibres are 1 or 2.
DivisorClass zero_class(const SurfaceModel& model);
DivisorClass line_class(const SurfaceModel& model);
DivisorClass fibre_class(const SurfaceModel& model, int which);
DivisorClass exceptional(const SurfaceModel& model, int i);
/// Sum of E_i for i in [first, last].
DivisorClass exceptional_sum(const SurfaceModel& model, int first, int last);

/// Throws std::invalid_argument if the class does not have the model's rank.
void check_rank(const SurfaceModel& model, const DivisorClass& d);

/// Intersection pairing. Throws std::invalid_argument on rank mismatch and
/// std::overflow_error if the value leaves int64.
std::int64_t intersect(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& b);

/// K = -3l + sum E_i (plane), -2f_1 - 2f_2 + sum E_i (quadric).
DivisorClass canonical(const SurfaceModel& model);

/// 1 + (D^2 + D.K)/2.
std::int64_t arithmetic_genus(const SurfaceModel& model, const DivisorClass& d);

/// "9l - 3E1 - 2E6", "3f1 + 3f2 - E1".
std::string format_class(const SurfaceModel& model, const DivisorClass& d);

struct Polarization {
  SurfaceModel model;
  DivisorClass H;
};

/// Checks rank, H^2 >= 1 and H.E_i >= 0; throws std::invalid_argument otherwise.
Polarization make_polarization(const SurfaceModel& model, DivisorClass H);

/// (H^2, H.K, K^2, 12 chi - K^2).
InvariantTuple invariants_of(const Polarization& pol, const Integer& chi);

struct CoordinateRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
};

/// One inclusive range per basis coefficient.
using Box = std::vector<CoordinateRange>;

/// E indices grouped by the tuple of their coefficients across `fixed`; every
/// permutation inside a group fixes all of those classes. Groups are returned
/// in order of first index, each as 1-based indices in increasing order.
std::vector<std::vector<int>> symmetry_blocks(const SurfaceModel& model, const std::vector<DivisorClass>& fixed);

/// Orbit representative: E coefficients sorted in decreasing order inside
/// each block.
DivisorClass canonical_form(const SurfaceModel& model, const std::vector<std::vector<int>>& blocks,
                            const DivisorClass& d);

struct Orbit {
  DivisorClass representative;
  std::size_t size = 0;
};

struct LineClassResult {
  std::vector<DivisorClass> classes;  // lexicographic
  std::vector<Orbit> orbits;          // by representative

  /// Total over orbits, equal to classes.size().
  std::size_t total() const;
};

/// All L in the box with H.L = 1 and L^2 + L.K = -2, grouped into orbits of the
/// E-index permutations fixing H.
LineClassResult enumerate_line_classes(const Polarization& pol, const Box& box);

struct Decomposition {
  DivisorClass A;
  DivisorClass B;
};

/// All A in the box with H.A = deg_A, p_a(A) >= 0 and p_a(target - A) >= 0,
/// ordered by A. Empty when deg_A < 1.
std::vector<Decomposition> enumerate_decompositions(const Polarization& pol, const DivisorClass& target,
                                                    std::int64_t deg_A, const Box& box);

/// Box from multiplicity ranges: leading coefficients as given, and
/// E coefficient range [-hi, -lo] for multiplicity range [lo, hi].
Box multiplicity_box(const SurfaceModel& model, const std::vector<CoordinateRange>& leading,
                     const std::vector<CoordinateRange>& multiplicities);

// Named rational models.
Polarization bl7_degree8();       // 6l - 2 sum E_1..7 = -2K
Polarization bl8_degree8();       // 4l - sum E_1..8
Polarization bl9_quadric_degree9();  // 3f1 + 3f2 - sum E_1..9
Polarization bl11_degree10();     // 6l - 2 sum E_1..5 - sum E_6..11
Polarization bl11_degree12();     // 9l - 3 sum E_1..5 - 2 sum E_6..11
Polarization del_pezzo(int degree);  // -K on Bl_{9-degree}(P^2), degree in [3, 9]

/// Named polarization lookup for the CLI and catalog.
std::optional<Polarization> polarization_by_name(const std::string& name);
std::vector<std::string> polarization_names();

/// On bl11_degree12: -K + E_i + E_j, i, j in 6..11 distinct (elliptic quartic).
DivisorClass degree12_quartic(int i, int j);
/// On bl11_degree12: H minus degree12_quartic(i, j) (degree 8, genus 3).
DivisorClass degree12_octic(int i, int j);

/// a in [0, 4], multiplicities in [-1, 2] for every E.
Box degree12_line_box();
/// a in [1, 6], cubic-point multiplicities in [0, 2], conic-point ones in [0, 1].
Box degree12_decomposition_box();

}  // namespace trisecant
