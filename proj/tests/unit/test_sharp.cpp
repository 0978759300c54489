#include <gtest/gtest.h>

#include <cmath>

#include "pspin/complexity.hpp"
#include "pspin/error.hpp"
#include "pspin/interval.hpp"
#include "pspin/sharp.hpp"
#include "pspin/specfun.hpp"

namespace sh = pspin::sharp;
namespace cx = pspin::complexity;
using pspin::IntervalSet;

TEST(Sharp, RegimeClassification) {
  for (int p : {3, 4, 9}) {
    const double e = cx::e_infinity(p);
    EXPECT_EQ(sh::regime(p, -e - 0.1), sh::SharpRegime::below_edge);
    EXPECT_EQ(sh::regime(p, -e - 2e-12), sh::SharpRegime::below_edge);
    EXPECT_EQ(sh::regime(p, -e), sh::SharpRegime::at_edge);
    EXPECT_EQ(sh::regime(p, -e + 5e-13), sh::SharpRegime::at_edge);
    EXPECT_EQ(sh::regime(p, -e + 1e-6), sh::SharpRegime::bulk);
    EXPECT_EQ(sh::regime(p, -1e-9), sh::SharpRegime::bulk);
    EXPECT_EQ(sh::regime(p, 0.0), sh::SharpRegime::positive);
    EXPECT_EQ(sh::regime(p, 3.0), sh::SharpRegime::positive);
  }
  EXPECT_STREQ(sh::to_string(sh::SharpRegime::at_edge), "at_edge");
  EXPECT_THROW(sh::regime(2, -1.0), pspin::DomainError);
  EXPECT_THROW(sh::regime(3, NAN), pspin::DomainError);
}

TEST(Sharp, QuadraticModelIsRejected) {
  EXPECT_THROW(sh::sharp_mean_total(2, 10, -1.0), pspin::DomainError);
  EXPECT_THROW(sh::sharp_mean_minima(2, 10, -3.0), pspin::DomainError);
  EXPECT_THROW(sh::compare_exact_sharp(2, -1.0, {10}), pspin::DomainError);
  EXPECT_THROW(sh::compare_exact_sharp(3, -1.0, {401}), pspin::DomainError);
}

TEST(Sharp, PositiveRegimeIsFlatAndHalvedAtZero) {
  for (int N : {10, 100}) {
    const auto at_zero = sh::sharp_mean_total(3, N, 0.0);
    const auto above = sh::sharp_mean_total(3, N, 0.7);
    EXPECT_EQ(above, sh::sharp_mean_total(3, N, 2.5));
    EXPECT_NEAR(above.log_abs() - at_zero.log_abs(), std::log(2.0), 1e-13);
    EXPECT_GT(above.sign(), 0);
  }
}

TEST(Sharp, PrefactorsArePositive) {
  for (int p : {3, 5}) {
    const double e = cx::e_infinity(p);
    for (double u : {-e - 1.0, -e - 0.01, -e, -e + 0.01, -0.5 * e, -0.01, 0.0, 1.0}) {
      EXPECT_GT(sh::sharp_mean_total(p, 50, u).sign(), 0) << p << " " << u;
    }
  }
}

TEST(Sharp, LogarithmicCorrectionByRegime) {
  const int p = 3;
  const double e = cx::e_infinity(p);
  const std::pair<double, double> cases[] = {{-e - 0.5, -0.5}, {-e, -1.0 / 3.0}, {-1.0, 0.0}, {0.5, 0.5}};
  for (auto [u, slope] : cases) {
    auto corr = [&](int N) { return sh::sharp_mean_total(p, N, u).log_abs() - N * cx::theta_total(p, u); };
    EXPECT_NEAR(corr(400) - corr(100), slope * std::log(4.0), 1e-9) << u;
  }
}

TEST(Sharp, RateMatchesComplexity) {
  for (double u : {-2.0, -1.0, 0.5}) {
    EXPECT_NEAR(sh::sharp_mean_total(3, 400, u).log_abs() / 400.0, cx::theta_total(3, u), 0.02);
  }
}

TEST(Sharp, AgreesWithExactMeanAtModerateSize) {
  for (double u : {-2.0, -1.0, 0.5}) {
    const auto exact = pspin::specfun::exact_mean_total(3, 100, IntervalSet::below(u));
    EXPECT_LT(pspin::relative_deviation(sh::sharp_mean_total(3, 100, u), exact), 0.10) << u;
  }
}

TEST(Sharp, MinimaDominateBelowTheEdge) {
  const auto total = sh::sharp_mean_total(3, 200, -2.2);
  const auto minima = sh::sharp_mean_minima(3, 200, -2.2);
  EXPECT_LT(pspin::relative_deviation(minima, total), 1e-3);
  const auto exact = pspin::specfun::exact_mean_total(3, 200, IntervalSet::below(-2.2));
  EXPECT_LT(pspin::relative_deviation(minima, exact), 0.02);
  EXPECT_THROW(sh::sharp_mean_minima(3, 200, -1.0), pspin::DomainError);
}

TEST(Sharp, AlternativeMinimaDenominatorRatio) {
  for (int p : {3, 4}) {
    for (double u : {-2.5, -3.5}) {
      const auto f = sh::edge_functions(p, u);
      const auto a = sh::sharp_mean_minima(p, 80, u, sh::MinimaDenominator::plus_phi_prime);
      const auto b = sh::sharp_mean_minima(p, 80, u, sh::MinimaDenominator::minus_phi_prime);
      const double ratio = (f.i_bar_prime - f.phi_prime) / (f.i_bar_prime + f.phi_prime);
      EXPECT_NEAR(a.to_double() / b.to_double(), ratio, 1e-12 * std::abs(ratio));
    }
  }
}

TEST(Sharp, EdgeFunctionsDefinitions) {
  const auto f = sh::edge_functions(3, -2.0);
  EXPECT_NEAR(f.v, 2.0 * std::sqrt(3.0 / 4.0), 1e-15);
  EXPECT_NEAR(f.psi, std::sqrt(f.v * f.v - 2.0), 1e-14);
  EXPECT_EQ(f.i_bar_prime, f.psi);
  EXPECT_NEAR(f.phi_prime, -f.v / 3.0, 1e-15);
  EXPECT_NEAR(f.phi, -f.v * f.v / 6.0, 1e-15);
  EXPECT_THROW(sh::edge_functions(3, -1.0), pspin::DomainError);
}

TEST(Sharp, ComparisonRowsAndCsv) {
  const auto rows = sh::compare_exact_sharp(3, -2.0, {50, 100, 200}, 2);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1].N, 100);
  EXPECT_GT(rows[0].rel_dev, rows[1].rel_dev);
  EXPECT_GT(rows[1].rel_dev, rows[2].rel_dev);
  EXPECT_EQ(rows[2].rel_dev, sh::compare_exact_sharp(3, -2.0, {200}, 1)[0].rel_dev);
  const auto csv = sh::to_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "p,u,N,exact_log,sharp_log,rel_dev");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}
