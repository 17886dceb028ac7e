#include <gtest/gtest.h>

#include "crossforge/exact.hpp"

using crossforge::ExactValue;

TEST(ExactValue, CanonicalForm) {
  const auto v = ExactValue::fraction(6, -4);
  EXPECT_EQ(v.numerator(), -3);
  EXPECT_EQ(v.denominator(), 2);
  EXPECT_EQ(v.to_string(), "-3/2");
  EXPECT_FALSE(v.is_integer());
  EXPECT_EQ(ExactValue(84).to_string(), "84");
}

TEST(ExactValue, ZeroDenominatorRejected) {
  EXPECT_THROW(ExactValue::fraction(1, 0), std::domain_error);
}

TEST(ExactValue, ArithmeticAndOrdering) {
  const auto a = ExactValue::fraction(1112, 108);
  EXPECT_EQ(a + ExactValue(42), ExactValue::fraction(42 * 108 + 1112, 108));
  EXPECT_LT(ExactValue(52), ExactValue(42) + a);
  EXPECT_EQ((ExactValue(3) / ExactValue(4)) * ExactValue(4), ExactValue(3));
  EXPECT_EQ(-ExactValue(5), ExactValue(0) - ExactValue(5));
}

TEST(ExactValue, Decimal) {
  EXPECT_EQ(ExactValue::fraction(4297, 1250).to_decimal(4), "3.4376");
  EXPECT_EQ(ExactValue::fraction(-1, 3).to_decimal(3), "-0.333");
  EXPECT_EQ(ExactValue(7).to_decimal(0), "7");
}

TEST(ExactValue, ClampAndParse) {
  EXPECT_EQ(ExactValue(-4).clamped_non_negative(), ExactValue(0));
  EXPECT_EQ(ExactValue(4).clamped_non_negative(), ExactValue(4));
  EXPECT_EQ(crossforge::parse_exact("-10/4"), ExactValue::fraction(-5, 2));
  EXPECT_THROW(crossforge::parse_exact("1/x"), std::invalid_argument);
}

TEST(ExactValue, IntegerConversion) {
  EXPECT_EQ(ExactValue(123456789012LL).to_int64(), 123456789012LL);
  EXPECT_THROW(ExactValue::fraction(1, 2).to_integer(), std::domain_error);
  crossforge::BigInt big = 1;
  for (int i = 0; i < 80; ++i) big *= 2;
  EXPECT_THROW(ExactValue(big).to_int64(), std::overflow_error);
}
