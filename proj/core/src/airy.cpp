#include "pspin/airy.hpp"

#include <cmath>
#include <numbers>

#include "pspin/error.hpp"
#include "pspin/quadrature.hpp"

namespace pspin::specfun {

namespace {

constexpr double kAi0 = 0.355028053887817239260063186004;
constexpr double kMinusAiPrime0 = 0.258819403792806798405183560189;
constexpr double kPi = std::numbers::pi;

AiryPair maclaurin(double x) {
  const double x3 = x * x * x;
  double f = 1.0, g = x, fp = 0.0, gp = 1.0;
  double a = 1.0, b = x, d = 0.5 * x * x, e = 1.0;
  fp = d;
  for (int k = 1; k < 200; ++k) {
    a *= x3 / ((3.0 * k) * (3.0 * k - 1.0));
    b *= x3 / ((3.0 * k) * (3.0 * k + 1.0));
    e *= x3 / ((3.0 * k) * (3.0 * k - 2.0));
    if (k >= 2) d *= x3 / ((3.0 * k - 3.0) * (3.0 * k - 1.0));
    f += a;
    g += b;
    gp += e;
    if (k >= 2) fp += d;
    const double tiny = 1e-18 * (std::fabs(f) + std::fabs(g) + std::fabs(fp) + std::fabs(gp));
    if (std::fabs(a) + std::fabs(b) + std::fabs(d) + std::fabs(e) < tiny) break;
  }
  return {kAi0 * f - kMinusAiPrime0 * g, kAi0 * fp - kMinusAiPrime0 * gp};
}

// Integrates y'' = x y from (x0, y0, y0') to x1 by local Taylor series.
AiryPair taylor_steps(double x0, AiryPair y, double x1) {
  const int steps = static_cast<int>(std::ceil(std::fabs(x1 - x0) / 0.5));
  const double h = (x1 - x0) / steps;
  for (int s = 0; s < steps; ++s) {
    const double xc = x0 + s * h;
    double c_prev2 = y.ai, c_prev = y.ai_prime;  // a_{n-2}, a_{n-1}
    double val = c_prev2 + c_prev * h;
    double der = c_prev;
    double hp = h;  // h^{n-1}
    double c_prev3 = 0.0;
    for (int n = 2; n < 200; ++n) {
      const double c = (xc * c_prev2 + c_prev3) / (static_cast<double>(n) * (n - 1));
      const double t_der = n * c * hp;
      hp *= h;
      const double t_val = c * hp;
      val += t_val;
      der += t_der;
      c_prev3 = c_prev2;
      c_prev2 = c_prev;
      c_prev = c;
      if (n > 8 && std::fabs(t_val) + std::fabs(t_der) < 1e-19 * (std::fabs(val) + std::fabs(der))) break;
    }
    y = {val, der};
  }
  return y;
}

// exp(-zeta) / pi * int_0^inf exp(-sqrt(x) t^2) cos(t^3/3) dt and its x-derivative.
AiryPair laplace_integral(double x) {
  const double rx = std::sqrt(x);
  const double zeta = 2.0 / 3.0 * x * rx;
  const double upper = std::sqrt(44.0 / rx);
  quad::Options opt;
  opt.rel_tol = 1e-13;
  opt.initial_panels = 16;
  const auto i0 = quad::integrate(
      [&](double t) { return std::exp(-rx * t * t) * std::cos(t * t * t / 3.0); }, 0.0, upper, opt);
  const auto i2 = quad::integrate(
      [&](double t) { return t * t * std::exp(-rx * t * t) * std::cos(t * t * t / 3.0); }, 0.0,
      upper, opt);
  const double pre = std::exp(-zeta) / kPi;
  return {pre * i0.value, -pre * (rx * i0.value + i2.value / (2.0 * rx))};
}

// Asymptotic series coefficients: u_k by recurrence, v_k = -(6k+1)/(6k-1) u_k.
AiryPair asymptotic_positive(double x) {
  const double rx = std::sqrt(x);
  const double zeta = 2.0 / 3.0 * x * rx;
  double u = 1.0, su = 1.0, sv = 1.0, last = 1.0;
  for (int k = 1; k < 60; ++k) {
    u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k) / zeta;
    const double v = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
    if (std::fabs(u) > last) break;
    last = std::fabs(u);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    su += sign * u;
    sv += sign * v;
    if (std::fabs(u) < 1e-18) break;
  }
  const double e = std::exp(-zeta) / (2.0 * std::sqrt(kPi));
  const double q = std::sqrt(rx);  // x^{1/4}
  return {e / q * su, -e * q * sv};
}

AiryPair asymptotic_negative(double x) {
  const double z = -x;
  const double rz = std::sqrt(z);
  const double zeta = 2.0 / 3.0 * z * rz;
  // P, Q for Ai; R, S for Ai'.
  double u = 1.0, p = 1.0, q = 0.0, r = 1.0, s = 0.0, last = 1.0;
  for (int k = 1; k < 60; ++k) {
    u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k) / zeta;
    if (std::fabs(u) > last) break;
    last = std::fabs(u);
    const double v = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
    // Terms of index k carry (-1)^{floor(k/2)}.
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      p += sign * u;
      r += sign * v;
    } else {
      q += sign * u;
      s += sign * v;
    }
    if (std::fabs(u) < 1e-18) break;
  }
  const long double zl = z;
  const long double phase = 2.0L / 3.0L * zl * std::sqrt(zl) - 0.25L * std::numbers::pi_v<long double>;
  const double c = static_cast<double>(std::cos(phase));
  const double sn = static_cast<double>(std::sin(phase));
  const double qz = std::sqrt(rz);  // z^{1/4}
  const double norm = 1.0 / std::sqrt(kPi);
  return {norm / qz * (c * p + sn * q), norm * qz * (sn * r - c * s)};
}

}  // namespace

AiryPair airy(double x) {
  if (std::isnan(x)) throw DomainError("airy: x is NaN");
  if (x > 10.0) return asymptotic_positive(x);
  if (x > 2.0) return laplace_integral(x);
  if (x >= -2.0) return maclaurin(x);
  if (x >= -10.0) return taylor_steps(-2.0, maclaurin(-2.0), x);
  return asymptotic_negative(x);
}

double airy_ai(double x) { return airy(x).ai; }

double airy_ai_prime(double x) { return airy(x).ai_prime; }

}  // namespace pspin::specfun
