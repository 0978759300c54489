#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "pspin/error.hpp"
#include "pspin/log_real.hpp"

using pspin::LogReal;

TEST(LogReal, ZeroHasSignZeroAndMinusInfinityLog) {
  const LogReal z = LogReal::zero();
  EXPECT_EQ(z.sign(), 0);
  EXPECT_EQ(z.log_abs(), -std::numeric_limits<double>::infinity());
  EXPECT_TRUE(LogReal::from_double(0.0).is_zero());
  EXPECT_TRUE(LogReal::from_log(-std::numeric_limits<double>::infinity()).is_zero());
}

TEST(LogReal, RoundTripsRepresentableValuesExactly) {
  for (double v : {1.0, -1.0, 3.5, -2.25e-300, 7.0e300, 0.125, 6.02214076e23, 4.9e-324,
                   std::numeric_limits<double>::max()}) {
    EXPECT_EQ(LogReal::from_double(v).to_double(), v) << v;
  }
}

TEST(LogReal, LogMagnitudeMatches) {
  EXPECT_NEAR(LogReal::from_double(1e-300).log_abs(), std::log(1e-300), 1e-12);
  EXPECT_NEAR(LogReal::from_log(12345.678).log_abs(), 12345.678, 1e-11);
  EXPECT_NEAR(LogReal::from_log(-0.25, -1).to_double(), -std::exp(-0.25), 1e-16);
}

TEST(LogReal, ArithmeticMatchesDoubles) {
  const double a = 3.75, b = -1.5;
  const LogReal la = LogReal::from_double(a), lb = LogReal::from_double(b);
  EXPECT_NEAR((la + lb).to_double(), a + b, 1e-15);
  EXPECT_NEAR((la - lb).to_double(), a - b, 1e-14);
  EXPECT_NEAR((la * lb).to_double(), a * b, 1e-14);
  EXPECT_NEAR((la / lb).to_double(), a / b, 1e-15);
  EXPECT_NEAR(la.sqrt().to_double(), std::sqrt(a), 1e-15);
  EXPECT_NEAR(la.pow(2.5).to_double(), std::pow(a, 2.5), 1e-13);
}

TEST(LogReal, CancellationGivesExactZero) {
  const LogReal x = LogReal::from_log(1234.5);
  EXPECT_TRUE((x - x).is_zero());
}

TEST(LogReal, HandlesMagnitudesBeyondDoubleRange) {
  const LogReal big = LogReal::from_log(5000.0);
  const LogReal sum = big + big;
  EXPECT_NEAR(sum.log_abs(), 5000.0 + std::log(2.0), 1e-12);
  EXPECT_TRUE(std::isinf(big.to_double()));
  EXPECT_EQ(LogReal::from_log(-5000.0).to_double(), 0.0);
}

TEST(LogReal, RelativeDeviation) {
  EXPECT_NEAR(pspin::relative_deviation(LogReal::from_double(1.1), LogReal::from_double(1.0)), 0.1, 1e-14);
  EXPECT_NEAR(pspin::relative_deviation(LogReal::from_log(900.0 + std::log(0.5)), LogReal::from_log(900.0)), 0.5,
              1e-12);
  EXPECT_NEAR(pspin::relative_deviation(LogReal::from_double(-1.0), LogReal::from_double(1.0)), 2.0, 1e-15);
  EXPECT_THROW(pspin::relative_deviation(LogReal::from_double(1.0), LogReal::zero()), pspin::DomainError);
}

TEST(LogReal, RejectsInvalidInput) {
  EXPECT_THROW(LogReal::from_double(std::nan("")), pspin::DomainError);
  EXPECT_THROW(LogReal::from_double(std::numeric_limits<double>::infinity()), pspin::DomainError);
  EXPECT_THROW((void)LogReal::from_double(-2.0).pow(0.5), pspin::DomainError);
  EXPECT_THROW(LogReal::from_double(1.0) / LogReal::zero(), pspin::DomainError);
}

TEST(LogReal, Streams) {
  std::ostringstream os;
  os << LogReal::zero() << ' ' << LogReal::from_log(2.0, -1);
  EXPECT_EQ(os.str(), "0 -exp(2)");
}
