#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace trisecant {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an operation is evaluated outside its mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Exact integer value of q, or nullopt if q has a nontrivial denominator.
inline std::optional<Integer> as_integer(const Rational& q) {
  if (!is_integral(q)) return std::nullopt;
  return boost::multiprecision::numerator(q);
}

/// Greatest integer <= q.
inline Integer floor(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  Integer quot = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) quot -= 1;
  return quot;
}

/// Least integer >= q.
inline Integer ceil(const Rational& q) { return -floor(-q); }

inline bool is_even(const Integer& x) { return (x & 1) == 0; }

inline bool divides(const Integer& d, const Integer& x) { return x % d == 0; }

inline std::string to_string(const Integer& x) { return x.str(); }

/// "p/q" or "p" when integral.
inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

/// Narrow to int64; throws std::overflow_error if the value does not fit.
inline std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer " + x.str() + " does not fit in 64 bits");
  }
  return x.convert_to<std::int64_t>();
}

}  // namespace trisecant
