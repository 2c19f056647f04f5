#include <gtest/gtest.h>

#include "trisecant/exact.hpp"
#include "trisecant/polynomial.hpp"

using trisecant::Integer;
using trisecant::Polynomial;
using trisecant::Rational;

TEST(Exact, FloorAndCeilRoundTowardInfinities) {
  EXPECT_EQ(trisecant::floor(Rational(7, 2)), 3);
  EXPECT_EQ(trisecant::floor(Rational(-7, 2)), -4);
  EXPECT_EQ(trisecant::floor(Rational(-8, 2)), -4);
  EXPECT_EQ(trisecant::ceil(Rational(7, 2)), 4);
  EXPECT_EQ(trisecant::ceil(Rational(-7, 2)), -3);
}

TEST(Exact, AsIntegerRejectsFractions) {
  EXPECT_EQ(trisecant::as_integer(Rational(12, 4)), Integer(3));
  EXPECT_FALSE(trisecant::as_integer(Rational(1, 3)).has_value());
}

TEST(Exact, ToStringOfRationals) {
  EXPECT_EQ(trisecant::to_string(Rational(12, 5)), "12/5");
  EXPECT_EQ(trisecant::to_string(Rational(-6, 3)), "-2");
}

TEST(Exact, ToInt64ChecksRange) {
  EXPECT_EQ(trisecant::to_int64(Integer(-42)), -42);
  Integer big = Integer(1) << 70;
  EXPECT_THROW(trisecant::to_int64(big), std::overflow_error);
}

TEST(Exact, ParityOfNegatives) {
  EXPECT_TRUE(trisecant::is_even(Integer(-4)));
  EXPECT_FALSE(trisecant::is_even(Integer(-3)));
  EXPECT_TRUE(trisecant::divides(12, Integer(-24)));
}

TEST(Polynomial, ArithmeticAndEvaluation) {
  const Polynomial x = Polynomial::variable();
  const Polynomial p = (x - Polynomial(6)) * (x - Polynomial(7)) * (x - Polynomial(8));
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.coefficient(0), -336);
  EXPECT_EQ(p.coefficient(1), 146);
  EXPECT_EQ(p.coefficient(2), -21);
  EXPECT_EQ(p.coefficient(3), 1);
  EXPECT_EQ(p.coefficient(9), 0);
  EXPECT_EQ(p(Integer(7)), 0);
  EXPECT_EQ(p(Integer(0)), -336);
}

TEST(Polynomial, CancellationTrimsDegree) {
  const Polynomial x = Polynomial::variable();
  const Polynomial p = x * x + x - x * x;
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE((p - x).is_zero());
  EXPECT_EQ((p - x).degree(), -1);
}

TEST(Polynomial, IntegerRootsAreSortedAndExcludeRationals) {
  const Polynomial x = Polynomial::variable();
  // (2x - 1)(x + 3) x^2 (x - 5)
  const Polynomial p = (Polynomial(2) * x - Polynomial(1)) * (x + Polynomial(3)) * x * x * (x - Polynomial(5));
  EXPECT_EQ(p.integer_roots(), (std::vector<Integer>{-3, 0, 5}));
}

TEST(Polynomial, ConstantPolynomialHasNoRoots) {
  EXPECT_TRUE(Polynomial(7).integer_roots().empty());
  EXPECT_THROW(Polynomial(0).integer_roots(), std::exception);
}

TEST(Polynomial, Formatting) {
  const Polynomial x = Polynomial::variable();
  EXPECT_EQ((Polynomial(2) * x * x * x - Polynomial(42) * x * x + Polynomial(292) * x - Polynomial(672)).str("n"),
            "2n^3 - 42n^2 + 292n - 672");
  EXPECT_EQ(Polynomial(0).str(), "0");
  EXPECT_EQ((-x + Polynomial(1)).str("t"), "-t + 1");
}
