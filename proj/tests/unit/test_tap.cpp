#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pspin/complexity.hpp"
#include "pspin/error.hpp"
#include "pspin/tap.hpp"

namespace tap = pspin::tap;
namespace cx = pspin::complexity;

TEST(Tap, InverseTemperatureAtTheEdge) {
  EXPECT_NEAR(tap::beta_of_u(3, -cx::e_infinity(3)), 1.5, 1e-14);
  for (int p = 3; p <= 8; ++p) {
    const double e = cx::e_infinity(p);
    double prev = tap::beta_of_u(p, -e);
    for (double u = -e - 0.05; u > -e - 3.0; u -= 0.05) {
      const double b = tap::beta_of_u(p, u);
      EXPECT_LT(b, prev);
      EXPECT_GT(b, 0.0);
      prev = b;
    }
    EXPECT_THROW(tap::beta_of_u(p, -e + 1e-6), pspin::DomainError);
  }
}

TEST(Tap, UStarInvertsBeta) {
  for (int p : {3, 4, 7}) {
    const double e = cx::e_infinity(p);
    for (double u : {-e - 1e-3, -e - 0.4, -e - 2.0, -6.0}) {
      EXPECT_NEAR(tap::u_star(p, tap::beta_of_u(p, u)), u, 1e-9 * std::abs(u));
    }
    EXPECT_EQ(tap::u_star(p, 10.0), -e);
  }
}

TEST(Tap, StationarityQuadraticRoots) {
  for (int p : {3, 4, 6}) {
    const double e = cx::e_infinity(p);
    for (double h : {-e, -e - 0.1, -e - 1.5, -9.0}) {
      const auto r = tap::beta_z_roots(p, h);
      ASSERT_EQ(r.size(), 2u);
      EXPECT_NEAR(r[0] * r[1], 2.0 / (p * (p - 1.0)), 1e-14);
      EXPECT_LE(r[0], std::sqrt(2.0 / (p * (p - 1.0))) * (1 + 1e-12));
      EXPECT_GE(r[1], std::sqrt(2.0 / (p * (p - 1.0))) * (1 - 1e-12));
      for (double bz : r) {
        EXPECT_NEAR((p - 1.0) / std::sqrt(2.0) * bz * bz + h * bz + std::sqrt(2.0) / p, 0.0, 1e-12);
      }
    }
    EXPECT_TRUE(tap::beta_z_roots(p, -e + 1e-3).empty());
  }
}

TEST(Tap, StationaryRootsStraddleThePeakWithOppositeCurvature) {
  std::mt19937_64 gen(4);
  int checked = 0;
  for (int t = 0; t < 400; ++t) {
    const int p = 3 + static_cast<int>(gen() % 5);
    const double e = cx::e_infinity(p);
    const double h = -e - std::uniform_real_distribution<double>(0.0, 3.0)(gen);
    const double beta = std::uniform_real_distribution<double>(0.2, 4.0)(gen);
    const auto r = tap::solve_q(p, beta, h);
    const double peak = (p - 2.0) / p;
    if (r.q.size() != 2) continue;
    ++checked;
    EXPECT_LT(r.q[0], peak);
    EXPECT_GT(r.q[1], peak);
    for (double q : r.q) {
      EXPECT_NEAR(tap::z_of_q(p, q), r.z, 1e-10 * r.z);
      EXPECT_NEAR(tap::tap_functional_dq(p, beta, h, q), 0.0, 1e-7 * (1 + tap::onsager_b_prime(p, beta, q)));
      EXPECT_NEAR(tap::tap_curvature_factored(p, beta, q), tap::tap_functional_d2q(p, beta, h, q),
                  1e-6 * (1 + std::abs(tap::onsager_b_second(p, beta, q))));
    }
    EXPECT_EQ(tap::q_curvature_sign(p, beta, h, r.q[0]), -tap::q_curvature_sign(p, beta, h, r.q[1]));
    EXPECT_NE(tap::q_curvature_sign(p, beta, h, r.q[0]), 0);
  }
  EXPECT_GT(checked, 100);
}

TEST(Tap, NoStationaryPointAboveTheEdge) {
  const double e = cx::e_infinity(3);
  EXPECT_TRUE(tap::solve_q(3, 1.0, -e + 0.2).q.empty());
  EXPECT_TRUE(tap::solve_q(3, 0.05, -e - 0.01).q.empty());
}

TEST(Tap, FunctionalDerivativesMatchFiniteDifferences) {
  const int p = 4;
  const double beta = 1.3, h = -2.1, dq = 1e-5;
  for (double q : {0.1, 0.4, 0.8}) {
    const double f1 = (tap::tap_functional(p, beta, h, q + dq) - tap::tap_functional(p, beta, h, q - dq)) / (2 * dq);
    EXPECT_NEAR(tap::tap_functional_dq(p, beta, h, q), f1, 1e-8);
    const double f2 = (tap::tap_functional_dq(p, beta, h, q + dq) - tap::tap_functional_dq(p, beta, h, q - dq)) / (2 * dq);
    EXPECT_NEAR(tap::tap_functional_d2q(p, beta, h, q), f2, 1e-7);
  }
  EXPECT_THROW(tap::onsager_b(p, beta, 1.0), pspin::DomainError);
  EXPECT_THROW(tap::onsager_b(2, beta, 0.5), pspin::DomainError);
  EXPECT_THROW(tap::onsager_b(p, 0.0, 0.5), pspin::DomainError);
}

TEST(Tap, ZFunctionPeak) {
  for (int p = 3; p <= 9; ++p) {
    const double peak = (p - 2.0) / p;
    EXPECT_NEAR(tap::z_of_q(p, peak), tap::z_max(p), 1e-15);
    EXPECT_LT(tap::z_of_q(p, peak - 0.01), tap::z_max(p));
    EXPECT_LT(tap::z_of_q(p, peak + 0.01), tap::z_max(p));
  }
}

TEST(Tap, ComplexityUsesTheCappedLevel) {
  const int p = 3;
  const double e = cx::e_infinity(p);
  const double beta = tap::beta_of_u(p, -1.9);
  const auto deep = tap::tap_complexity(p, 0, -2.0, beta);
  EXPECT_EQ(deep.level, -2.0);
  EXPECT_NEAR(deep.value, cx::theta_index(p, 0, -2.0), 1e-15);
  const auto capped = tap::tap_complexity(p, 0, -e, beta);
  EXPECT_NEAR(capped.level, -1.9, 1e-9);
  EXPECT_NEAR(capped.value, cx::theta_index(p, 0, -1.9), 1e-9);
  const auto k2 = tap::tap_complexity(p, 2, -e, 5.0);
  EXPECT_NEAR(k2.value, cx::theta_index(p, 1, -e), 1e-15);
  EXPECT_TRUE(tap::tap_complexity(p, 0, -3.0, beta).vanishing);
  EXPECT_TRUE(tap::tap_complexity(p, 0, -e, 0.1).vanishing);
  EXPECT_FALSE(tap::tap_complexity(p, 0, -e, 5.0).vanishing);
  EXPECT_THROW(tap::tap_complexity(p, -1, -2.0, 1.0), pspin::DomainError);
  EXPECT_THROW(tap::tap_complexity(p, 0, 0.0, 1.0), pspin::DomainError);
}
