#include <gtest/gtest.h>

#include "reemobius/arith.hpp"

using reemobius::InconsistencyError;
using reemobius::Integer;
using reemobius::Natural;
using reemobius::Rational;

TEST(Natural, ParseAndPrintRoundTrip) {
  const std::string big = "127167013743759383021219557056";
  EXPECT_EQ(Natural::parse(big).str(), big);
  EXPECT_THROW(Natural::parse(""), std::invalid_argument);
  EXPECT_THROW(Natural::parse("-3"), std::invalid_argument);
  EXPECT_THROW(Natural::parse("12a"), std::invalid_argument);
}

TEST(Natural, ArithmeticBeyond64Bits) {
  const Natural q = Natural::pow(3, 27);
  const Natural order = Natural::pow(q, 3) * (Natural::pow(q, 3) + 1) * (q - 1);
  EXPECT_EQ(Natural::exact_div(order, q - 1), Natural::pow(q, 3) * (Natural::pow(q, 3) + 1));
  EXPECT_EQ(Natural::gcd(Natural(28), Natural(37)), Natural(1));
  auto [quot, rem] = Natural::divmod(Natural(217), Natural(7));
  EXPECT_EQ(quot, Natural(31));
  EXPECT_TRUE(rem.is_zero());
}

TEST(Natural, SubtractionBelowZeroThrows) {
  EXPECT_THROW(Natural(3) - Natural(4), std::domain_error);
  EXPECT_THROW(Natural(Integer(-1)), std::domain_error);
}

TEST(Natural, ExactDivisionDetectsRemainder) {
  EXPECT_THROW(Natural::exact_div(Natural(10), Natural(3)), InconsistencyError);
  EXPECT_THROW(Natural::divmod(Natural(10), Natural(0)), std::domain_error);
  EXPECT_TRUE(Natural(7).divides(Natural(28)));
  EXPECT_FALSE(Natural(0).divides(Natural(0)));
}

TEST(Natural, Ordering) {
  EXPECT_LT(Natural(3), Natural::pow(3, 100));
  EXPECT_EQ(Natural(5) <=> Natural(5), std::strong_ordering::equal);
}

TEST(Rational, LowestTermsPositiveDenominator) {
  const Rational r(Integer(-6), Integer(-4));
  EXPECT_EQ(r.num(), 3);
  EXPECT_EQ(r.den(), 2);
  const Rational s(Integer(6), Integer(-4));
  EXPECT_EQ(s.num(), -3);
  EXPECT_EQ(s.den(), 2);
  EXPECT_THROW(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST(Rational, ParseArithmeticAndIntegrality) {
  const Rational a = Rational::parse("648/703");
  EXPECT_EQ(a.str(), "648/703");
  EXPECT_EQ(Rational::parse("10/4").str(), "5/2");
  EXPECT_EQ((a + Rational(Natural(1))).str(), "1351/703");
  EXPECT_TRUE((Rational(Natural(14)) / Rational(Natural(7))).is_integer());
  EXPECT_EQ((Rational(Natural(14)) / Rational(Natural(7))).to_natural(), Natural(2));
  EXPECT_THROW(a.to_natural(), InconsistencyError);
  EXPECT_LT(a, Rational(Natural(1)));
  EXPECT_THROW(a / Rational(), std::domain_error);
}
