#include "pspin/sharp.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "pspin/airy.hpp"
#include "pspin/complexity.hpp"
#include "pspin/error.hpp"
#include "pspin/interval.hpp"
#include "pspin/rng.hpp"
#include "pspin/specfun.hpp"

namespace pspin::sharp {

namespace {

constexpr double kPi = std::numbers::pi;

void require_p(int p) {
  if (p == 2) throw DomainError("sharp asymptotics: unsupported for p = 2");
  if (p < 3) throw DomainError("sharp asymptotics: p must be >= 3");
}

void require_n(int N) {
  if (N < 1) throw DomainError("sharp asymptotics: N must be >= 1");
}

LogReal below_edge_value(int p, int N, double u, double phi_sign) {
  const auto e = edge_functions(p, u);
  const double n = N;
  const double denom = e.i_bar_prime + phi_sign * e.phi_prime;
  if (denom == 0.0) throw NumericalError("sharp asymptotics: vanishing denominator at u = " + std::to_string(u));
  const double log_pre = std::log(e.h) - 0.5 * std::log(2.0 * p * kPi) + e.i_bar - 0.5 * e.v * e.i_bar_prime -
                         std::log(std::abs(denom));
  return LogReal::from_log(log_pre - 0.5 * std::log(n) + n * complexity::theta_total(p, u), denom > 0 ? 1 : -1);
}

}  // namespace

SharpRegime regime(int p, double u) {
  require_p(p);
  if (!std::isfinite(u)) throw DomainError("sharp asymptotics: u must be finite");
  const double e = complexity::e_infinity(p);
  if (std::abs(u + e) <= 1e-12) return SharpRegime::at_edge;
  if (u < -e) return SharpRegime::below_edge;
  if (u < 0.0) return SharpRegime::bulk;
  return SharpRegime::positive;
}

const char* to_string(SharpRegime r) {
  switch (r) {
    case SharpRegime::below_edge: return "below_edge";
    case SharpRegime::at_edge: return "at_edge";
    case SharpRegime::bulk: return "bulk";
    case SharpRegime::positive: return "positive";
  }
  return "?";
}

EdgeFunctions edge_functions(int p, double u) {
  require_p(p);
  if (!(u < -complexity::e_infinity(p))) throw DomainError("edge_functions: requires u < -E_inf");
  EdgeFunctions e;
  e.v = -u * std::sqrt(p / (2.0 * (p - 1.0)));
  e.psi = specfun::edge_psi(e.v);
  e.i_bar = specfun::edge_ibar(e.v);
  e.i_bar_prime = e.psi;
  e.h = specfun::edge_h(e.v);
  e.phi = -(p - 2.0) * e.v * e.v / (2.0 * p);
  e.phi_prime = -(p - 2.0) * e.v / p;
  return e;
}

LogReal sharp_mean_total(int p, int N, double u) {
  require_p(p);
  require_n(N);
  const double n = N;
  const double e = complexity::e_infinity(p);
  switch (regime(p, u)) {
    case SharpRegime::below_edge:
      return below_edge_value(p, N, u, -1.0);
    case SharpRegime::at_edge: {
      const double pre = 2.0 * specfun::airy_ai(0.0) * std::sqrt(2.0 * p) / (3.0 * (p - 2.0));
      return LogReal::from_log(std::log(pre) - std::log(n) / 3.0 + n * complexity::theta_total(p, -e));
    }
    case SharpRegime::bulk: {
      const double pre = 2.0 * std::sqrt(2.0 * p * (e * e - u * u)) / ((2.0 - p) * kPi * u);
      return LogReal::from_log(std::log(pre) + n * complexity::theta_total(p, u));
    }
    case SharpRegime::positive: {
      double pre = 4.0 * std::numbers::sqrt2 / std::sqrt(kPi * (p - 2.0));
      if (u == 0.0) pre *= 0.5;
      return LogReal::from_log(std::log(pre) + 0.5 * std::log(n) + n * complexity::theta_total(p, 0.0));
    }
  }
  return LogReal::zero();
}

LogReal sharp_mean_minima(int p, int N, double u, MinimaDenominator denominator) {
  require_p(p);
  require_n(N);
  if (!(u < -complexity::e_infinity(p))) throw DomainError("sharp_mean_minima: requires u < -E_inf");
  return below_edge_value(p, N, u, denominator == MinimaDenominator::minus_phi_prime ? -1.0 : 1.0);
}

std::vector<ComparisonRow> compare_exact_sharp(int p, double u, const std::vector<int>& N_list, int threads) {
  require_p(p);
  for (int N : N_list) {
    if (N < 1 || N > 400) throw DomainError("compare_exact_sharp: N must lie in [1, 400]");
  }
  const int workers = threads > 0 ? threads : default_thread_count();
  return run_blocks(N_list.size(), workers, [&](std::size_t i) {
    ComparisonRow r;
    r.p = p;
    r.u = u;
    r.N = N_list[i];
    const LogReal exact = specfun::exact_mean_total(p, r.N, IntervalSet::below(u));
    const LogReal approx = sharp_mean_total(p, r.N, u);
    r.exact_log = exact.log_abs();
    r.sharp_log = approx.log_abs();
    r.rel_dev = relative_deviation(approx, exact);
    return r;
  });
}

std::string to_csv(const std::vector<ComparisonRow>& rows) {
  std::string out = "p,u,N,exact_log,sharp_log,rel_dev\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%d,%.17g,%.17g,%.17g\n", r.p, r.u, r.N, r.exact_log, r.sharp_log,
                  r.rel_dev);
    out += buf;
  }
  return out;
}

}  // namespace pspin::sharp
