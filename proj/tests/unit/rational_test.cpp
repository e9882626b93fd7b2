#include <gtest/gtest.h>

#include <stdexcept>

#include "mcsp/rational.hpp"

namespace mcsp {
namespace {

TEST(Rational, ParsesDecimalAndFraction) {
  EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("1/4"), Rational(1, 4));
  EXPECT_EQ(Rational::parse(".5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("-2"), Rational(-2));
  EXPECT_EQ(Rational::parse("2/6"), Rational(1, 3));
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
}

TEST(Rational, ToString) {
  EXPECT_EQ(Rational(1, 4).to_string(), "0.25");
  EXPECT_EQ(Rational(1, 3).to_string(), "1/3");
  EXPECT_EQ(Rational(3).to_string(), "3");
  EXPECT_EQ(Rational(-1, 8).to_string(), "-0.125");
  EXPECT_EQ(Rational(49, 100).to_string(), "0.49");
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 4) + Rational(1, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) - Rational(3, 4), Rational(-1, 4));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(6, 2).ceil(), 3);
}

TEST(Rational, CompareScaled) {
  EXPECT_EQ(compare_scaled(Rational(1, 4), 8, 2), 0);
  EXPECT_LT(compare_scaled(Rational(1, 4), 7, 2), 0);
  EXPECT_GT(compare_scaled(Rational(1, 4), 9, 2), 0);
}

}  // namespace
}  // namespace mcsp
