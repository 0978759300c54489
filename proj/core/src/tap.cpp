#include "pspin/tap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pspin/complexity.hpp"
#include "pspin/error.hpp"

namespace pspin::tap {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

void require(int p, double beta) { TapParams{p, beta}.validated(); }

void require_q(double q) {
  if (!(q >= 0.0 && q < 1.0)) throw DomainError("TAP: q must lie in [0, 1)");
}

// Bisection for z_of_q(q) = z on [a, b] where z_of_q is monotone.
double invert_z(int p, double z, double a, double b, bool increasing) {
  for (int it = 0; it < 200 && b - a > 1e-16; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const bool below = z_of_q(p, m) < z;
    (below == increasing ? a : b) = m;
  }
  return 0.5 * (a + b);
}

std::vector<double> roots_for_z(int p, double z) {
  const double peak = (p - 2.0) / p;
  const double zm = z_max(p);
  if (!(z > 0.0) || z > zm * (1.0 + 1e-14)) return {};
  if (std::abs(z - zm) <= 1e-14 * zm) return {peak};
  return {invert_z(p, z, 0.0, peak, true), invert_z(p, z, peak, 1.0, false)};
}

}  // namespace

const TapParams& TapParams::validated() const {
  if (p < 3) throw DomainError("TAP: p must be >= 3, got " + std::to_string(p));
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("TAP: beta must be positive");
  return *this;
}

double onsager_b(int p, double beta, double q) {
  require(p, beta);
  require_q(q);
  return -std::log1p(-q) / (2.0 * beta) -
         0.25 * beta * (1.0 + (p - 1.0) * std::pow(q, p) - p * std::pow(q, p - 1));
}

double onsager_b_prime(int p, double beta, double q) {
  require(p, beta);
  require_q(q);
  return 1.0 / (2.0 * beta * (1.0 - q)) + 0.25 * beta * p * (p - 1.0) * std::pow(q, p - 2) * (1.0 - q);
}

double onsager_b_second(int p, double beta, double q) {
  require(p, beta);
  require_q(q);
  return 1.0 / (2.0 * beta * (1.0 - q) * (1.0 - q)) -
         0.25 * beta * p * (p - 1.0) * std::pow(q, p - 3) * ((p - 1.0) * q - p + 2.0);
}

double tap_functional(int p, double beta, double h, double q) {
  return std::pow(q, 0.5 * p) * h / kSqrt2 + onsager_b(p, beta, q);
}

double tap_functional_dq(int p, double beta, double h, double q) {
  return 0.5 * p * std::pow(q, 0.5 * p - 1.0) * h / kSqrt2 + onsager_b_prime(p, beta, q);
}

double tap_functional_d2q(int p, double beta, double h, double q) {
  return 0.5 * p * (0.5 * p - 1.0) * std::pow(q, 0.5 * p - 2.0) * h / kSqrt2 + onsager_b_second(p, beta, q);
}

double tap_curvature_factored(int p, double beta, double q) {
  require(p, beta);
  require_q(q);
  const double bz = beta * z_of_q(p, q);
  return -static_cast<double>(p) * p * (p - 1.0) / (8.0 * q * beta * (1.0 - q) * (1.0 - q)) *
         (q - (p - 2.0) / p) *
         (bz * bz - 2.0 / (p * (p - 1.0)));
}

double z_of_q(int p, double q) {
  require_q(q);
  return (1.0 - q) * std::pow(q, 0.5 * p - 1.0);
}

double z_max(int p) {
  if (p < 3) throw DomainError("TAP: p must be >= 3");
  return 2.0 / p * std::pow((p - 2.0) / p, 0.5 * (p - 2.0));
}

double beta_of_u(int p, double u) {
  if (p < 3) throw DomainError("beta_of_u: p must be >= 3");
  const double e = complexity::e_infinity(p);
  if (!std::isfinite(u) || u > -e) throw DomainError("beta_of_u: requires u <= -E_inf");
  const double s = std::sqrt(std::max(0.0, (u - e) * (u + e)));
  return p / (2.0 * kSqrt2 * (p - 1.0)) * std::pow(p / (p - 2.0), 0.5 * (p - 2.0)) * (-u - s);
}

double u_star(int p, double beta) {
  require(p, beta);
  const double e = complexity::e_infinity(p);
  if (beta >= beta_of_u(p, -e)) return -e;
  // beta(u) = K w with w = -u - sqrt(u^2 - E^2) in (0, E]; inverting,
  // u = -(w^2 + E^2) / (2 w).
  const double K = p / (2.0 * kSqrt2 * (p - 1.0)) * std::pow(p / (p - 2.0), 0.5 * (p - 2.0));
  const double w = beta / K;
  return -(w * w + e * e) / (2.0 * w);
}

std::vector<double> beta_z_roots(int p, double h) {
  if (p < 3) throw DomainError("beta_z_roots: p must be >= 3");
  const double e = complexity::e_infinity(p);
  if (!std::isfinite(h) || h > -e) return {};
  const double s = std::sqrt(std::max(0.0, (h - e) * (h + e)));
  const double denom = kSqrt2 * (p - 1.0);
  // The smaller root by the product rule avoids cancellation.
  const double large = (-h + s) / denom;
  const double small = (2.0 / (p * (p - 1.0))) / large;
  return {small, large};
}

TapRoots solve_q(int p, double beta, double h) {
  require(p, beta);
  TapRoots r;
  r.h = h;
  const auto bz = beta_z_roots(p, h);
  if (bz.empty()) return r;
  r.z = bz[0] / beta;
  r.q = roots_for_z(p, r.z);
  if (bz[1] > bz[0]) r.upper_branch_q = roots_for_z(p, bz[1] / beta);
  return r;
}

int q_curvature_sign(int p, double beta, double h, double q) {
  require(p, beta);
  const double residual = tap_functional_dq(p, beta, h, q);
  if (!(std::abs(residual) <= 1e-8 * (1.0 + std::abs(onsager_b_prime(p, beta, q))))) {
    throw DomainError("q_curvature_sign: (q, h) is not stationary");
  }
  if (std::abs(q - (p - 2.0) / p) <= 1e-12) return 0;
  const double c = tap_curvature_factored(p, beta, q);
  return c > 0.0 ? 1 : (c < 0.0 ? -1 : 0);
}

TapComplexity tap_complexity(int p, int k, double u, double beta) {
  require(p, beta);
  if (k < 0) throw DomainError("tap_complexity: k must be >= 0");
  const double e = complexity::e_infinity(p);
  if (!std::isfinite(u) || u > -e) throw DomainError("tap_complexity: requires u <= -E_inf");
  TapComplexity c;
  c.level = std::min(u_star(p, beta), u);
  const int j = k == 0 ? 0 : k - 1;
  c.value = complexity::theta_index(p, j, c.level);
  const double ej = complexity::threshold_ek(p, j);
  c.vanishing = beta < beta_of_u(p, -ej) || u < -ej;
  return c;
}

}  // namespace pspin::tap
