#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "pspin/error.hpp"
#include "pspin/quadrature.hpp"

namespace quad = pspin::quad;

TEST(Quadrature, PolynomialIsExact) {
  const auto r = quad::integrate([](double x) { return 3 * x * x - 2 * x + 1; }, -1.0, 2.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 9.0 - 3.0 + 3.0, 1e-13);
}

TEST(Quadrature, MatchesBoostGaussKronrodOnOscillatoryIntegrand) {
  auto f = [](double x) { return std::exp(-0.1 * x) * std::cos(7.0 * x); };
  quad::Options opt;
  opt.rel_tol = 0.0;
  opt.abs_tol = 1e-13;
  opt.initial_panels = 8;
  const auto r = quad::integrate(f, 0.0, 10.0, opt);
  const double boost = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 10.0, 15, 1e-14);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, boost, 1e-12);
}

TEST(Quadrature, HandlesIntegrableEndpointSingularity) {
  quad::Options opt;
  opt.rel_tol = 1e-9;
  const auto r = quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt);
  EXPECT_NEAR(r.value, 2.0, 1e-8);
}

TEST(Quadrature, GaussianMass) {
  const auto r = quad::integrate([](double x) { return std::exp(-x * x / 2); }, -12.0, 12.0);
  EXPECT_NEAR(r.value, std::sqrt(2 * std::numbers::pi), 1e-12);
}

TEST(Quadrature, CheckedVariantReportsFailure) {
  quad::Options opt;
  opt.max_intervals = 2;
  opt.rel_tol = 1e-15;
  EXPECT_THROW(quad::integrate_checked([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0, opt, "wiggle"),
               pspin::NumericalError);
  EXPECT_THROW(quad::integrate([](double x) { return x; }, 0.0, INFINITY), pspin::DomainError);
}
