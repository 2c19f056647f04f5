#include "trisecant/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace trisecant {

Polynomial::Polynomial(long long constant) : coeffs_{Integer(constant)} { trim(); }

Polynomial::Polynomial(Integer constant) : coeffs_{std::move(constant)} { trim(); }

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::variable() { return Polynomial(std::vector<Integer>{0, 1}); }

Integer Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Integer(0);
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Polynomial::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

namespace {

std::vector<Integer> positive_divisors(Integer x) {
  if (x < 0) x = -x;
  std::vector<Integer> small;
  std::vector<Integer> large;
  for (Integer d = 1; d * d <= x; ++d) {
    if (x % d == 0) {
      small.push_back(d);
      if (d * d != x) large.push_back(x / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Integer> Polynomial::integer_roots() const {
  if (is_zero()) throw DomainError("every integer is a root of the zero polynomial");
  std::vector<Integer> roots;
  // Strip the x^m factor; 0 is a root iff the constant term vanishes.
  std::size_t shift = 0;
  while (coeffs_[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(0);
  const Integer& constant = coeffs_[shift];
  Polynomial reduced(std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(shift), coeffs_.end()));
  for (const Integer& d : positive_divisors(constant)) {
    if (reduced(d) == 0) roots.push_back(d);
    if (reduced(-d) == 0) roots.push_back(-d);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    const Integer& a = coeffs_[static_cast<std::size_t>(p)];
    if (a == 0) continue;
    Integer mag = a < 0 ? Integer(-a) : a;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (mag != 1 || p == 0) os << mag;
    if (p >= 1) os << var;
    if (p >= 2) os << "^" << p;
    first = false;
  }
  return os.str();
}

}  // namespace trisecant
