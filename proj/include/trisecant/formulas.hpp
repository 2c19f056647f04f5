#pragma once

// Closed-form invariants of a smooth surface S in P^6 with hyperplane class H:
//   n = H^2, e = K.H, k = K^2, c = c_2(S)
// and the multisecant counts, genus bounds and numerical side conditions that
// drive the classification search. Everything is exact.

#include "trisecant/exact.hpp"

#include <compare>
#include <optional>
#include <string>

namespace trisecant {

struct InvariantTuple {
  Integer n;
  Integer e;
  Integer k;
  Integer c;
  std::optional<Integer> r;  // number of (-1)-lines, when the profile tracks it

  std::string str() const;
};

bool operator==(const InvariantTuple& a, const InvariantTuple& b);
/// Lexicographic on (n, e, k, c, r); a missing r sorts before any value.
bool operator<(const InvariantTuple& a, const InvariantTuple& b);

namespace expr {

// The counting formulas as ring expressions, so they can be evaluated over
// integers or expanded over polynomials.

/// Trisecant lines meeting a fixed P^4.
template <class T>
T d3(const T& n, const T& e, const T& k, const T& c) {
  return T(T(2) * n * n * n - T(42) * n * n + T(196) * n - k * (T(3) * n - T(28)) +
           c * (T(3) * n - T(20)) - e * (T(18) * n - T(132)));
}

/// Tangential trisecants.
template <class T>
T t3(const T& n, const T& e, const T& k, const T& c) {
  return T(T(6) * n * n - T(84) * n + k * (n - T(28)) - c * (n - T(20)) +
           e * (T(4) * n - T(84)));
}

/// Trisecant count of the surface in P^7 that S is an inner projection of,
/// written in the invariants of S.
template <class T>
T s3(const T& n, const T& e, const T& k, const T& c) {
  return T(n * n * n - T(27) * n * n + T(176) * n + T(108) + c * (T(3) * n - T(37)) -
           k * (T(3) * n - T(53)) - e * (T(15) * n - T(177)));
}

/// Double point formula of the projection of S from one of its lines into P^4.
template <class T>
T double_point_p4(const T& n, const T& e, const T& k, const T& c) {
  return T(n * n - T(16) * n + T(34) - T(5) * e - k + c);
}

}  // namespace expr

Integer d3(const InvariantTuple& t);
Integer t3(const InvariantTuple& t);
Integer s3(const InvariantTuple& t);
Integer double_point_p4(const InvariantTuple& t);

/// d(d-5) - 10(pi-1) + 12 chi - 2 K^2; zero for a smooth surface in P^4.
Integer severi_p4(const Integer& d, const Integer& pi, const Integer& chi, const Integer& ksq);

/// Castelnuovo's maximal genus of an irreducible nondegenerate degree-n curve
/// in P^N, with m = floor((n-2)/(N-1)). Requires N >= 3 and n >= N + 1.
Integer castelnuovo(const Integer& n, int ambient);

/// Castelnuovo ceiling extended to the degenerate range: nullopt when no
/// nondegenerate degree-n curve spans P^N (n < N), 0 for the rational normal
/// curve (n = N), castelnuovo(n, N) otherwise.
std::optional<Integer> genus_ceiling(const Integer& n, int ambient);

/// n^2/10 - n/2.
Rational harris_p1(const Integer& n);

enum class CilibertoVariant { p2, p3 };

/// n^2/(2(r-1)+3) (p3) or n^2/(2(r-1)+4) (p2), plus the maximal correction 1.
Rational ciliberto_bound(const Integer& n, int r, CilibertoVariant variant);

/// (n + e)/2 + 1; throws DomainError when n + e is odd.
Integer sectional_genus(const Integer& n, const Integer& e);

/// (k + c)/12.
Rational holomorphic_euler_characteristic(const InvariantTuple& t);

struct Predicates {
  bool hodge = false;           // k n <= e^2
  bool miyaoka = false;         // k <= 3c
  bool noether = false;         // 12 | k + c
  bool parity = false;          // 2 | n + e
  bool genus_in_range = false;  // sectional genus <= bound (false when parity fails)
};

Predicates predicates(const InvariantTuple& t, const Rational& genus_bound);

/// k, c enter every counting formula linearly: value = k_coeff k + c_coeff c + constant.
struct AffineKC {
  Integer k_coeff;
  Integer c_coeff;
  Integer constant;

  Integer operator()(const Integer& k, const Integer& c) const {
    return k_coeff * k + c_coeff * c + constant;
  }
};

AffineKC d3_affine(const Integer& n, const Integer& e);
AffineKC t3_affine(const Integer& n, const Integer& e);
AffineKC s3_affine(const Integer& n, const Integer& e);
AffineKC double_point_affine(const Integer& n, const Integer& e);

struct KC {
  Rational k;
  Rational c;
};

/// Unique rational (k, c) with first(k,c) = rhs_first and second(k,c) = rhs_second;
/// nullopt when the system is singular.
std::optional<KC> solve_linear_kc(const AffineKC& first, const Integer& rhs_first,
                                  const AffineKC& second, const Integer& rhs_second);

/// The k forced by d3 = t3 = 0 for given (n, e), by exact elimination of c.
Rational eliminate_c_for_k(const Integer& n, const Integer& e);

}  // namespace trisecant
