#include <gtest/gtest.h>

#include "islands/error.hpp"
#include "islands/exact.hpp"

using namespace islands;

TEST(Exact, Binomial) {
  EXPECT_EQ(binomial(10, 2), 45);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(100, 50), BigInt("100891344545564193334812497256"));
}

TEST(Exact, FibonacciBothDirections) {
  EXPECT_EQ(fibonacci(0), 0);
  EXPECT_EQ(fibonacci(1), 1);
  EXPECT_EQ(fibonacci(10), 55);
  EXPECT_EQ(fibonacci(-1), 1);
  EXPECT_EQ(fibonacci(-2), -1);
  EXPECT_EQ(fibonacci(-7), 13);
  for (int m = -20; m < 20; ++m) EXPECT_EQ(fibonacci(m + 2), fibonacci(m + 1) + fibonacci(m));
}

TEST(Exact, PowInt) {
  EXPECT_EQ(pow_int(Rational(0), 0), 1);
  EXPECT_EQ(pow_int(Rational(1, 2), 3), Rational(1, 8));
  EXPECT_EQ(pow_int(Rational(-2), 5), -32);
}

TEST(Exact, ParseRational) {
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-3"), -3);
  EXPECT_EQ(parse_rational("4/-6"), Rational(-2, 3));
  for (const char* bad : {"", "1/0", "x", "1/2/3", "1.5"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadParam);
    }
  }
}

TEST(Exact, ToString) {
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(-4, 2)), "-2");
  EXPECT_EQ(to_string(BigInt(1) << 70), "1180591620717411303424");
}
