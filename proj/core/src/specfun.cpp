#include "pspin/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pspin/error.hpp"
#include "pspin/quadrature.hpp"

namespace pspin::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

void require_n(int N, const char* who) {
  if (N < 1) throw DomainError(std::string(who) + ": N must be >= 1, got " + std::to_string(N));
}

double phi_double(int n, double t) {
  HermiteWalker w(t);
  w.advance_to(n);
  return w.value_double();
}

// Everything rho_N needs at y = sqrt(N) x: the Hermite triple around N and
// J_N, from one pass of the recurrence. Partial integrals F_n(y) =
// int_0^y phi_n and half-line integrals G_n = int_0^inf phi_n obey
//   F_{n+1} = sqrt(n/(n+1)) F_{n-1} - sqrt(2/(n+1)) (phi_n(y) - phi_n(0)),
//   G_{n+1} = sqrt(n/(n+1)) G_{n-1} + sqrt(2/(n+1)) phi_n(0).
struct DensityParts {
  HermiteTriple phi;
  double j = 0.0;
};

DensityParts density_parts(int N, double y) {
  const double q = std::pow(kPi, -0.25);
  double f_prev = q * std::sqrt(kPi / 2.0) * std::erf(y / kSqrt2);
  double f_cur = q * kSqrt2 * -std::expm1(-0.5 * y * y);
  double g_prev = q * std::sqrt(kPi / 2.0);
  double g_cur = q * kSqrt2;
  double zero_prev = q, zero_cur = 0.0;  // phi_{n-1}(0), phi_n(0)
  HermiteWalker w(y);
  w.advance();
  for (int n = 1; n < N; ++n) {
    const double a = std::sqrt(n / (n + 1.0));
    const double b = std::sqrt(2.0 / (n + 1.0));
    const double f_next = a * f_prev - b * (w.value_double() - zero_cur);
    const double g_next = a * g_prev + b * zero_cur;
    const double zero_next = -a * zero_prev;
    f_prev = f_cur, f_cur = f_next;
    g_prev = g_cur, g_cur = g_next;
    zero_prev = zero_cur, zero_cur = zero_next;
    w.advance();
  }
  DensityParts d;
  d.phi.below = w.previous();
  d.phi.at = w.value();
  w.advance();
  d.phi.above = w.value();
  d.j = (N % 2 == 0) ? f_cur : f_cur - g_cur;
  return d;
}

}  // namespace

double j_integral(int N, double x) {
  require_n(N, "j_integral");
  if (!std::isfinite(x)) throw DomainError("j_integral: x must be finite");
  const double y = std::sqrt(static_cast<double>(N)) * std::fabs(x);
  const double sgn = x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
  const double turning = std::sqrt(2.0 * N + 1.0);
  // Beyond the turning point |phi_N(t)| decays at least like
  // exp(-(t - turning)^2 / 2), so this many extra units reach 1e-18.
  const double tail = std::sqrt(2.0 * std::log(1e18));
  const double freq = std::sqrt(2.0 * N + 1.0) / kPi;
  quad::Options opt;
  opt.rel_tol = 1e-10;
  opt.abs_tol = 1e-300;
  auto f = [N](double t) { return phi_double(N, t); };
  if (N % 2 == 0) {
    if (y == 0.0) return 0.0;
    const double b = std::min(y, turning + tail);
    opt.initial_panels = std::max(8, static_cast<int>(std::ceil(b * freq)) + 1);
    return sgn * quad::integrate_checked(f, 0.0, b, opt, "j_integral").value;
  }
  const double b = std::max(y, turning) + tail;
  opt.initial_panels = std::max(8, static_cast<int>(std::ceil((b - y) * freq)) + 1);
  const double upper = quad::integrate_checked(f, y, b, opt, "j_integral").value;
  // For x = 0 and odd N the two half-lines cancel; sgn = 0 covers it.
  return -sgn * upper;
}

double j_integral_recurrence(int N, double x) {
  require_n(N, "j_integral_recurrence");
  if (!std::isfinite(x)) throw DomainError("j_integral_recurrence: x must be finite");
  const double y = std::sqrt(static_cast<double>(N)) * std::fabs(x);
  const double j = density_parts(N, y).j;
  const double sgn = x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
  return sgn * j;
}

LogReal rho_n_log(int N, double x) {
  require_n(N, "rho_n");
  if (!std::isfinite(x)) throw DomainError("rho_n: x must be finite");
  const double n = N;
  const double y = std::sqrt(n) * std::fabs(x);
  const auto d = density_parts(N, y);
  LogReal s = LogReal::from_double(n) * d.phi.at * d.phi.at -
              LogReal::from_double(std::sqrt(n * (n + 1.0))) * d.phi.below * d.phi.above;
  s += LogReal::from_double(std::sqrt(n / 2.0) * d.j) * d.phi.below;
  if (N % 2 == 1) s += d.phi.below / LogReal::from_double(hermite_total_integral(N - 1));
  s *= LogReal::from_double(1.0 / std::sqrt(n));
  // Rounding can leave a tiny negative value where the density vanishes to
  // working precision.
  return s.sign() < 0 ? LogReal::zero() : s;
}

double rho_n(int N, double x) { return rho_n_log(N, x).to_double(); }

DensityCurve density_curve(int N, double lo, double hi, int points) {
  require_n(N, "density_curve");
  if (points < 2 || !(lo < hi)) throw DomainError("density_curve: need points >= 2 and lo < hi");
  DensityCurve c;
  c.N = N;
  c.grid.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double x = lo + (hi - lo) * i / (points - 1);
    c.grid.emplace_back(x, rho_n(N, x));
  }
  return c;
}

double edge_psi(double x) { return std::sqrt(std::fabs(x * x - 2.0)); }

double edge_ibar(double x) {
  if (!(x >= kSqrt2)) throw DomainError("edge_ibar: requires x >= sqrt(2)");
  const double s = std::sqrt((x - kSqrt2) * (x + kSqrt2));
  return 0.5 * x * s - std::log((x + s) / kSqrt2);
}

double edge_h(double x) {
  const double r = std::fabs((x - kSqrt2) / (x + kSqrt2));
  const double q = std::pow(r, 0.25);
  return q + 1.0 / q;
}

LogReal pr_asymptotic(int N, double x) {
  require_n(N, "pr_asymptotic");
  if (!(x > kSqrt2 + 0.05)) throw DomainError("pr_asymptotic: requires x > sqrt(2) + 0.05");
  const double n = N;
  return LogReal::from_log(-n * edge_ibar(x) + std::log(edge_h(x)) -
                           0.5 * std::log(4.0 * kPi * std::sqrt(2.0 * n)));
}

LogReal exact_mean_total(int p, int N, const IntervalSet& B) {
  if (p < 2) throw DomainError("exact_mean_total: p must be >= 2");
  require_n(N, "exact_mean_total");
  const double n = N;
  const double c = std::sqrt(p / (2.0 * (p - 1.0)));
  const double gauss = n * (p - 2.0) / (2.0 * p);
  auto log_integrand = [&](double x) {
    const LogReal r = rho_n_log(N, x);
    return r.is_zero() ? -std::numeric_limits<double>::infinity() : r.log_abs() - gauss * x * x;
  };

  constexpr double kDrop = 45.0;  // exp(-45) ~ 3e-20 relative to the part maximum
  const double bulk = kSqrt2 + 1.0;
  const double step = 0.25;
  LogReal total = LogReal::zero();
  const IntervalSet domain = B.scaled(c);
  for (const auto& part : domain.parts()) {
    double lo = part.lo, hi = part.hi;
    // Reference maximum over the part's intersection with the bulk region,
    // plus finite endpoints.
    double m = -std::numeric_limits<double>::infinity();
    const double scan_lo = std::max(lo, -bulk), scan_hi = std::min(hi, bulk);
    if (scan_lo < scan_hi) {
      const int pts = std::max(64, 4 * N);
      for (int i = 0; i <= pts; ++i) m = std::max(m, log_integrand(scan_lo + (scan_hi - scan_lo) * i / pts));
    }
    if (std::isfinite(lo)) m = std::max(m, log_integrand(lo));
    if (std::isfinite(hi)) m = std::max(m, log_integrand(hi));
    if (!std::isfinite(hi)) {
      double t = std::max(std::isfinite(lo) ? lo : -bulk, bulk);
      for (double v = log_integrand(t); v > m - kDrop; v = log_integrand(t)) {
        m = std::max(m, v);
        t += step;
      }
      hi = t;
    }
    if (!std::isfinite(lo)) {
      double t = std::min(hi, -bulk);
      for (double v = log_integrand(t); v > m - kDrop; v = log_integrand(t)) {
        m = std::max(m, v);
        t -= step;
      }
      lo = t;
    }
    if (!(lo < hi) || !std::isfinite(m)) continue;
    quad::Options opt;
    opt.rel_tol = 1e-10;
    opt.abs_tol = 1e-300;
    opt.initial_panels = std::max(16, static_cast<int>(std::ceil(n * (hi - lo) / 3.0)));
    const auto r = quad::integrate_checked([&](double x) { return std::exp(log_integrand(x) - m); },
                                           lo, hi, opt, "exact_mean_total");
    if (r.value > 0.0) total += LogReal::from_log(m + std::log(r.value));
  }
  const LogReal prefactor =
      LogReal::from_log(std::log(2.0 * n) + 0.5 * std::log(2.0 / p) + 0.5 * n * std::log(p - 1.0));
  return prefactor * total;
}

}  // namespace pspin::specfun
