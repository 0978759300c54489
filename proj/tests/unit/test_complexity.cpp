#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "pspin/complexity.hpp"
#include "pspin/error.hpp"

namespace cx = pspin::complexity;
using cx::ThetaBranch;

// Reference values below come from 50-digit mpmath evaluations of the
// defining integrals and root problems.

TEST(EInfinity, ClosedForm) {
  EXPECT_NEAR(cx::e_infinity(2), 1.4142135623730950488, 1e-15);
  EXPECT_NEAR(cx::e_infinity(3), 1.6329931618554520655, 1e-15);
  double prev = 0.0;
  for (int p = 2; p <= 50; ++p) {
    const double e = cx::e_infinity(p);
    EXPECT_GT(e, prev);
    EXPECT_LT(e, 2.0);
    prev = e;
  }
  EXPECT_THROW(cx::e_infinity(1), pspin::DomainError);
}

TEST(ModelParams, Validation) {
  EXPECT_NO_THROW((cx::ModelParams{3, 10}.validated()));
  EXPECT_NO_THROW((cx::ModelParams{2, std::nullopt}.validated()));
  EXPECT_THROW((cx::ModelParams{1, 10}.validated()), pspin::DomainError);
  EXPECT_THROW((cx::ModelParams{3, 0}.validated()), pspin::DomainError);
}

TEST(RateI1, ReferenceValueAndEdge) {
  EXPECT_NEAR(cx::rate_i1(3, -2.0), 0.20754645532203029245, 1e-13);
  EXPECT_EQ(cx::rate_i1(3, -cx::e_infinity(3)), 0.0);
  EXPECT_THROW(cx::rate_i1(3, -1.0), pspin::DomainError);
}

TEST(RateI1, ClosedFormMatchesIntegralForm) {
  for (int p : {2, 3, 5, 12}) {
    const double e = cx::e_infinity(p);
    double prev = 0.0;
    for (int i = 1; i <= 60; ++i) {
      const double u = -e - 0.05 * i;
      auto f = [e](double z) { return std::sqrt(z * z - e * e); };
      const double integral =
          2.0 / (e * e) * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, u, -e, 20, 1e-15);
      const double closed = cx::rate_i1(p, u);
      EXPECT_NEAR(closed, integral, 1e-10) << "p=" << p << " u=" << u;
      EXPECT_GT(closed, prev);
      prev = closed;
    }
  }
}

TEST(Theta, ReferenceValues) {
  EXPECT_NEAR(cx::theta_total(3, 0.0), 0.34657359027997265471, 1e-15);
  EXPECT_NEAR(cx::theta_total(3, -cx::e_infinity(3)), 0.5 * std::log(2.0) - 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(cx::theta_index(3, 0, -1.0), 0.013240256946639321375, 1e-15);
  for (double u : {0.0, 0.5, 3.0}) EXPECT_EQ(cx::theta_total(2, u), 0.0);
  EXPECT_LT(cx::theta_index(3, 1, -1.7), cx::theta_index(3, 0, -1.7));
}

TEST(Theta, ContinuousAtBranchPoints) {
  for (int p = 2; p <= 12; ++p) {
    const double e = cx::e_infinity(p);
    EXPECT_NEAR(cx::theta_total_branch(p, ThetaBranch::below_edge, -e), cx::theta_total_branch(p, ThetaBranch::bulk, -e),
                1e-12);
    EXPECT_NEAR(cx::theta_total_branch(p, ThetaBranch::bulk, 0.0), cx::theta_total_branch(p, ThetaBranch::above_zero, 0.0),
                1e-12);
    for (int k = 0; k <= 5; ++k) {
      EXPECT_NEAR(cx::theta_index_branch(p, k, ThetaBranch::below_edge, -e),
                  cx::theta_index_branch(p, k, ThetaBranch::bulk, -e), 1e-12);
    }
  }
}

TEST(Theta, MonotoneBoundedAndOrdered) {
  for (int p = 2; p <= 12; ++p) {
    const double e = cx::e_infinity(p);
    const double top = 0.5 * std::log(p - 1.0);
    const double plateau = top - (p - 2.0) / p;
    double prev_t = -INFINITY;
    std::vector<double> prev_k(6, -INFINITY);
    for (int i = 0; i < 1000; ++i) {
      const double u = -3.0 + 4.0 * i / 999.0;
      const double t = cx::theta_total(p, u);
      EXPECT_GE(t, prev_t);
      EXPECT_LE(t, top + 1e-15);
      prev_t = t;
      const double t0 = cx::theta_index(p, 0, u);
      for (int k = 0; k <= 5; ++k) {
        const double tk = cx::theta_index(p, k, u);
        EXPECT_GE(tk, prev_k[k]);
        EXPECT_LE(tk, plateau + 1e-15);
        prev_k[k] = tk;
        if (u >= -e) {
          EXPECT_NEAR(tk, plateau, 1e-12);
        } else if (k > 0) {
          EXPECT_LT(tk, t0);
        }
      }
    }
  }
}

TEST(Thresholds, ReferenceRootsAndOrdering) {
  EXPECT_NEAR(cx::threshold_ek(3, 0), 1.6569983635274732512, 1e-12);
  EXPECT_NEAR(cx::threshold_ek(3, 1), 1.6528731981030430102, 1e-12);
  EXPECT_NEAR(cx::threshold_ek(4, 0), 1.7940850281792544533, 1e-12);
  EXPECT_NEAR(cx::threshold_ek(10, 1), 2.0921424910189342124, 1e-12);
  for (int p = 3; p <= 8; ++p) {
    const auto t = cx::threshold_table(p, 12);
    ASSERT_EQ(t.e_k.size(), 13u);
    for (std::size_t k = 0; k < t.e_k.size(); ++k) {
      EXPECT_EQ(t.e_k[k].first, static_cast<int>(k));
      EXPECT_GT(t.e_k[k].second, t.e_infinity);
      EXPECT_LT(std::abs(cx::theta_index(p, static_cast<int>(k), -t.e_k[k].second)), 1e-12);
      EXPECT_LT(cx::theta_index(p, static_cast<int>(k), -t.e_k[k].second - 0.01), 0.0);
      if (k > 0) EXPECT_LT(t.e_k[k].second, t.e_k[k - 1].second);
    }
  }
  EXPECT_THROW(cx::threshold_ek(2, 0), pspin::DomainError);
}

TEST(GroundState, ThreeRoutesAgree) {
  for (int p = 3; p <= 10; ++p) {
    const double ek = cx::threshold_ek(p, 0);
    const auto var = cx::ground_state_variational(p);
    const auto sc = cx::ground_state_scalar(p);
    EXPECT_NEAR(var.gamma, ek, 1e-8) << p;
    EXPECT_NEAR(sc.gamma, ek, 1e-8) << p;
    EXPECT_NEAR(var.d * (var.c + var.d), 1.0 / p, 1e-8) << p;
    EXPECT_GT(var.c, var.box_lo);
    EXPECT_LT(var.c, var.box_hi);
    EXPECT_NEAR(cx::reduced_parisi(p, var.c, var.d), var.gamma, 1e-14);
    EXPECT_NEAR(cx::scalar_g(p, sc.a), 0.0, 1e-10);
    EXPECT_GT(sc.a, p - 1.0);
  }
  EXPECT_NEAR(cx::ground_state_scalar(3).gamma, 1.6569983635274732512, 1e-10);
}

TEST(GroundState, ScalarFunctionShape) {
  for (int p = 3; p <= 10; ++p) {
    EXPECT_NEAR(cx::scalar_g(p, 1.0), 0.0, 1e-15);
    const double h = 1e-5;
    EXPECT_NEAR((cx::scalar_g(p, 1.0 + h) - cx::scalar_g(p, 1.0 - h)) / (2 * h), 0.0, 1e-8);
    EXPECT_LT(cx::scalar_g(p, p - 1.0), 0.0);
  }
}

TEST(CrisantiSommers, MinimaFormulaMatchesIndexZeroComplexity) {
  EXPECT_NEAR(cx::cs_minima_complexity(4, -2.0), -1.8192639910435354089, 1e-12);
  for (int p : {3, 4, 5}) {
    const double top = -std::sqrt(2.0 * (p - 1.0) / p);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double E = top - 2.0 * i / 999.0;
      worst = std::max(worst, std::abs(cx::cs_minima_complexity(p, E) - cx::theta_index(p, 0, std::numbers::sqrt2 * E)));
    }
    EXPECT_LT(worst, 1e-10) << p;
    EXPECT_THROW(cx::cs_minima_complexity(p, top + 0.01), pspin::DomainError);
  }
}

TEST(TotalCount, Exponents) {
  const auto t3 = cx::total_count_exponents(3);
  EXPECT_NEAR(t3.total, 0.34657359027997265471, 1e-15);
  EXPECT_NEAR(t3.per_index, 0.013240256946639321375, 1e-15);
  const auto t2 = cx::total_count_exponents(2);
  EXPECT_EQ(t2.total, 0.0);
  EXPECT_EQ(t2.per_index, 0.0);
  for (int p = 3; p <= 12; ++p) {
    const auto t = cx::total_count_exponents(p);
    for (int k : {0, 3, 50}) EXPECT_NEAR(cx::theta_index(p, k, 1.0), t.per_index, 1e-14);
    EXPECT_NEAR(cx::theta_total(p, 1.0), t.total, 1e-14);
  }
}
