#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/hermite.hpp>

#include "pspin/hermite.hpp"
#include "pspin/specfun.hpp"

namespace sf = pspin::specfun;

namespace {

// log|phi_j(x)| from Boost's physicists' Hermite polynomial.
double boost_log_phi(int j, double x) {
  const double h = boost::math::hermite(static_cast<unsigned>(j), x);
  return std::log(std::abs(h)) - 0.5 * x * x -
         0.5 * (j * std::log(2.0) + std::lgamma(j + 1.0) + 0.5 * std::log(std::numbers::pi));
}

}  // namespace

TEST(Hermite, ClosedFormsAtZero) {
  EXPECT_NEAR(sf::hermite_phi(0, 0.0).to_double(), std::pow(std::numbers::pi, -0.25), 1e-15);
  EXPECT_TRUE(sf::hermite_phi(1, 0.0).is_zero());
}

TEST(Hermite, LowOrderClosedForms) {
  const double c = std::pow(std::numbers::pi, -0.25);
  for (double x : {-3.0, -0.7, 0.0, 0.4, 1.9, 5.0}) {
    const double g = c * std::exp(-x * x / 2);
    const double expect[5] = {g, g * std::sqrt(2.0) * x, g * (2 * x * x - 1) / std::sqrt(2.0),
                              g * (2 * x * x * x - 3 * x) / std::sqrt(3.0),
                              g * (4 * x * x * x * x - 12 * x * x + 3) / (2 * std::sqrt(6.0))};
    for (int j = 0; j <= 4; ++j) EXPECT_NEAR(sf::hermite_phi(j, x).to_double(), expect[j], 1e-12) << j << ' ' << x;
  }
}

TEST(Hermite, MatchesBoostPolynomials) {
  for (int j : {5, 17, 40, 80, 120}) {
    for (double x : {-7.5, -2.0, -0.3, 0.9, 3.3, 11.0}) {
      const double h = boost::math::hermite(static_cast<unsigned>(j), x);
      if (std::abs(h) < 1e-8 * std::pow(2.0 * std::abs(x) + 1.0, j)) continue;  // near a polynomial root
      const auto v = sf::hermite_phi(j, x);
      EXPECT_NEAR(v.log_abs(), boost_log_phi(j, x), 1e-11) << j << ' ' << x;
      EXPECT_EQ(v.sign(), h > 0 ? 1 : -1);
    }
  }
}

TEST(Hermite, ParityIsExact) {
  for (int j = 0; j <= 200; j += 7) {
    for (double x : {0.3, 2.2, 9.0, 25.0}) {
      const auto a = sf::hermite_phi(j, x);
      const auto b = sf::hermite_phi(j, -x);
      EXPECT_TRUE(j % 2 == 0 ? a == b : a == -b) << j << ' ' << x;
    }
  }
}

TEST(Hermite, FarTailStaysFinite) {
  const auto v = sf::hermite_phi(200, 3.0 * std::sqrt(200.0));
  EXPECT_EQ(v.sign(), 1);
  EXPECT_TRUE(std::isfinite(v.log_abs()));
  EXPECT_LT(pspin::relative_deviation(v, sf::pr_asymptotic(200, 3.0)), 0.01);
  const auto deep = sf::hermite_phi(2000, 3.0 * std::sqrt(2000.0));
  EXPECT_EQ(deep.to_double(), 0.0);
  EXPECT_LT(pspin::relative_deviation(deep, sf::pr_asymptotic(2000, 3.0)), 1e-3);
  const auto w = sf::hermite_phi(2000, 1e3);
  EXPECT_TRUE(std::isfinite(w.log_abs()));
}

TEST(Hermite, WalkerAgreesWithBatch) {
  const double x = 1.3;
  const auto all = sf::hermite_phi_all(60, x);
  sf::HermiteWalker w(x);
  for (int j = 0; j <= 60; ++j) {
    w.advance_to(j);
    EXPECT_EQ(w.index(), j);
    EXPECT_NEAR(w.value().to_double(), all[j].to_double(), 1e-14);
    EXPECT_NEAR(w.value_double(), all[j].to_double(), 1e-14);
  }
  const auto t = sf::hermite_triple(10, x);
  EXPECT_NEAR(t.below.to_double(), all[9].to_double(), 1e-15);
  EXPECT_NEAR(t.at.to_double(), all[10].to_double(), 1e-15);
  EXPECT_NEAR(t.above.to_double(), all[11].to_double(), 1e-15);
  EXPECT_TRUE(sf::hermite_triple(0, x).below.is_zero());
}

TEST(Hermite, Orthonormality) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  for (int j = 0; j <= 30; j += 3) {
    for (int k = j; k <= 30; k += 4) {
      auto f = [&](double x) { return sf::hermite_phi(j, x).to_double() * sf::hermite_phi(k, x).to_double(); };
      const double v = GK::integrate(f, -15.0, 15.0, 25, 1e-14);
      EXPECT_NEAR(v, j == k ? 1.0 : 0.0, 1e-10) << j << ' ' << k;
    }
  }
}

TEST(Hermite, TotalIntegral) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  for (int n : {0, 1, 2, 7, 10, 24}) {
    auto f = [&](double x) { return sf::hermite_phi(n, x).to_double(); };
    EXPECT_NEAR(sf::hermite_total_integral(n), GK::integrate(f, -20.0, 20.0, 25, 1e-14), 1e-11) << n;
  }
  for (int n : {200, 800}) {
    EXPECT_NEAR(sf::hermite_total_integral(n) / (2.0 * std::pow(2.0 * n, -0.25)), 1.0, 2.0 / n);
  }
}

TEST(Hermite, ChristoffelDarbouxMatchesDirectSum) {
  for (int N = 1; N <= 50; N += 7) {
    for (int i = 0; i <= 40; ++i) {
      const double y = -8.0 + 0.4 * i;
      const auto all = sf::hermite_phi_all(N - 1, y);
      pspin::LogReal direct;
      for (const auto& v : all) direct += v * v;
      EXPECT_LT(pspin::relative_deviation(sf::christoffel_darboux_sum(N, y), direct), 1e-10) << N << ' ' << y;
    }
  }
}
