#pragma once

#include "trisecant/exact.hpp"

#include <string>
#include <vector>

namespace trisecant {

// Dense univariate polynomial with exact integer coefficients.
// coeffs[i] is the coefficient of x^i; the vector carries no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long long constant);  // NOLINT(google-explicit-constructor)
  Polynomial(Integer constant);    // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Integer> coeffs);

  static Polynomial variable();

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t power) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Integer operator()(const Integer& x) const;

  /// Integer roots, ascending, found through the rational root theorem.
  std::vector<Integer> integer_roots() const;

  std::string str(const std::string& var = "n") const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator-(const Polynomial& p) { return Polynomial(0) - p; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

}  // namespace trisecant
