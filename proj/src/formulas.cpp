#include "trisecant/formulas.hpp"

#include <sstream>
#include <tuple>

namespace trisecant {

std::string InvariantTuple::str() const {
  std::ostringstream os;
  os << "(" << n << ", " << e << ", " << k << ", " << c;
  if (r) os << ", r=" << *r;
  os << ")";
  return os.str();
}

bool operator==(const InvariantTuple& a, const InvariantTuple& b) {
  return a.n == b.n && a.e == b.e && a.k == b.k && a.c == b.c && a.r == b.r;
}

bool operator<(const InvariantTuple& a, const InvariantTuple& b) {
  if (a.n != b.n) return a.n < b.n;
  if (a.e != b.e) return a.e < b.e;
  if (a.k != b.k) return a.k < b.k;
  if (a.c != b.c) return a.c < b.c;
  return a.r < b.r;
}

Integer d3(const InvariantTuple& t) { return expr::d3(t.n, t.e, t.k, t.c); }
Integer t3(const InvariantTuple& t) { return expr::t3(t.n, t.e, t.k, t.c); }
Integer s3(const InvariantTuple& t) { return expr::s3(t.n, t.e, t.k, t.c); }
Integer double_point_p4(const InvariantTuple& t) { return expr::double_point_p4(t.n, t.e, t.k, t.c); }

Integer severi_p4(const Integer& d, const Integer& pi, const Integer& chi, const Integer& ksq) {
  return Integer(d * (d - 5) - 10 * (pi - 1) + 12 * chi - 2 * ksq);
}

Integer castelnuovo(const Integer& n, int ambient) {
  if (ambient < 3) throw DomainError("castelnuovo: ambient dimension must be at least 3");
  if (n < ambient + 1) {
    throw DomainError("castelnuovo: degree " + n.str() + " is too small for a nondegenerate curve in P^" +
                      std::to_string(ambient));
  }
  const Integer m = (n - 2) / (ambient - 1);  // n - 2 > 0 here, so this is the floor
  // m (n - N - (m-1)(N-1)/2): the half-integer product is always integral.
  Rational value = Rational(m) * (Rational(n - ambient) - Rational((m - 1) * (ambient - 1), 2));
  auto integral = as_integer(value);
  if (!integral) throw std::logic_error("castelnuovo: non-integral bound " + to_string(value));
  return *integral;
}

std::optional<Integer> genus_ceiling(const Integer& n, int ambient) {
  if (n < ambient) return std::nullopt;
  if (n == ambient) return Integer(0);
  return castelnuovo(n, ambient);
}

Rational harris_p1(const Integer& n) { return Rational(n * n, 10) - Rational(n, 2); }

Rational ciliberto_bound(const Integer& n, int r, CilibertoVariant variant) {
  if (r < 6) throw DomainError("ciliberto_bound: requires r >= 6");
  if (n < 0) throw DomainError("ciliberto_bound: negative degree");
  const int denom = 2 * (r - 1) + (variant == CilibertoVariant::p3 ? 3 : 4);
  return Rational(n * n, denom) + 1;
}

Integer sectional_genus(const Integer& n, const Integer& e) {
  const Integer sum = n + e;
  if (!is_even(sum)) {
    throw DomainError("sectional_genus: n + e = " + sum.str() + " is odd");
  }
  return sum / 2 + 1;
}

Rational holomorphic_euler_characteristic(const InvariantTuple& t) { return Rational(t.k + t.c, 12); }

Predicates predicates(const InvariantTuple& t, const Rational& genus_bound) {
  Predicates p;
  p.hodge = t.k * t.n <= t.e * t.e;
  p.miyaoka = t.k <= 3 * t.c;
  p.noether = divides(12, t.k + t.c);
  p.parity = is_even(t.n + t.e);
  p.genus_in_range = p.parity && Rational(sectional_genus(t.n, t.e)) <= genus_bound;
  return p;
}

namespace {

template <class F>
AffineKC linearize(F&& f) {
  AffineKC a;
  a.constant = f(Integer(0), Integer(0));
  a.k_coeff = f(Integer(1), Integer(0)) - a.constant;
  a.c_coeff = f(Integer(0), Integer(1)) - a.constant;
  return a;
}

}  // namespace

AffineKC d3_affine(const Integer& n, const Integer& e) {
  return linearize([&](const Integer& k, const Integer& c) { return expr::d3(n, e, k, c); });
}

AffineKC t3_affine(const Integer& n, const Integer& e) {
  return linearize([&](const Integer& k, const Integer& c) { return expr::t3(n, e, k, c); });
}

AffineKC s3_affine(const Integer& n, const Integer& e) {
  return linearize([&](const Integer& k, const Integer& c) { return expr::s3(n, e, k, c); });
}

AffineKC double_point_affine(const Integer& n, const Integer& e) {
  return linearize([&](const Integer& k, const Integer& c) { return expr::double_point_p4(n, e, k, c); });
}

std::optional<KC> solve_linear_kc(const AffineKC& first, const Integer& rhs_first,
                                  const AffineKC& second, const Integer& rhs_second) {
  Integer det = first.k_coeff * second.c_coeff - second.k_coeff * first.c_coeff;
  if (det == 0) return std::nullopt;
  const Integer b1 = rhs_first - first.constant;
  const Integer b2 = rhs_second - second.constant;
  Integer num_k = b1 * second.c_coeff - b2 * first.c_coeff;
  Integer num_c = first.k_coeff * b2 - second.k_coeff * b1;
  // cpp_rational rejects a negative denominator.
  if (det < 0) {
    det = -det;
    num_k = -num_k;
    num_c = -num_c;
  }
  return KC{Rational(num_k, det), Rational(num_c, det)};
}

Rational eliminate_c_for_k(const Integer& n, const Integer& e) {
  if (n < 1) throw DomainError("eliminate_c_for_k: requires n >= 1");
  auto kc = solve_linear_kc(d3_affine(n, e), 0, t3_affine(n, e), 0);
  if (!kc) throw std::logic_error("eliminate_c_for_k: singular system");  // det = 16n
  return kc->k;
}

}  // namespace trisecant
