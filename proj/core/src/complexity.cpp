#include "pspin/complexity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pspin/error.hpp"

namespace pspin::complexity {

namespace {

void require_p(int p, int min_p = 2) {
  if (p < min_p) {
    throw DomainError("p must be >= " + std::to_string(min_p) + ", got " + std::to_string(p));
  }
}

void require_k(int k) {
  if (k < 0) throw DomainError("index k must be >= 0, got " + std::to_string(k));
}

double plateau(int p) { return 0.5 * std::log(static_cast<double>(p - 1)); }

double quadratic_term(int p, double u) {
  return static_cast<double>(p - 2) / (4.0 * (p - 1)) * u * u;
}

}  // namespace

const ModelParams& ModelParams::validated() const {
  require_p(p);
  if (N && *N < 1) throw DomainError("N must be >= 1, got " + std::to_string(*N));
  return *this;
}

double e_infinity(int p) {
  require_p(p);
  return 2.0 * std::sqrt(static_cast<double>(p - 1) / p);
}

double rate_i1(int p, double u) {
  const double e = e_infinity(p);
  if (!std::isfinite(u)) throw DomainError("rate_i1: u must be finite");
  if (u > -e) throw DomainError("rate_i1: requires u <= -E_inf");
  const double s = std::sqrt((u - e) * (u + e));
  return -(u / (e * e)) * s - std::log((-u + s) / e);
}

double theta_total_branch(int p, ThetaBranch branch, double u) {
  require_p(p);
  switch (branch) {
    case ThetaBranch::below_edge:
      return plateau(p) - quadratic_term(p, u) - rate_i1(p, u);
    case ThetaBranch::bulk:
      return plateau(p) - quadratic_term(p, u);
    case ThetaBranch::above_zero:
      return plateau(p);
  }
  return 0.0;
}

double theta_index_branch(int p, int k, ThetaBranch branch, double u) {
  require_p(p);
  require_k(k);
  const double flat = plateau(p) - static_cast<double>(p - 2) / p;
  switch (branch) {
    case ThetaBranch::below_edge:
      return plateau(p) - quadratic_term(p, u) - (k + 1) * rate_i1(p, u);
    case ThetaBranch::bulk:
    case ThetaBranch::above_zero:
      return flat;
  }
  return 0.0;
}

double theta_total(int p, double u) {
  require_p(p);
  if (!std::isfinite(u)) throw DomainError("theta_total: u must be finite");
  if (u <= -e_infinity(p)) return theta_total_branch(p, ThetaBranch::below_edge, u);
  if (u <= 0.0) return theta_total_branch(p, ThetaBranch::bulk, u);
  return theta_total_branch(p, ThetaBranch::above_zero, u);
}

double theta_index(int p, int k, double u) {
  require_p(p);
  require_k(k);
  if (!std::isfinite(u)) throw DomainError("theta_index: u must be finite");
  if (u <= -e_infinity(p)) return theta_index_branch(p, k, ThetaBranch::below_edge, u);
  return theta_index_branch(p, k, ThetaBranch::bulk, u);
}

double threshold_ek(int p, int k) {
  if (p == 2) throw DomainError("threshold_ek: unsupported for p = 2 (no isolated root)");
  require_p(p, 3);
  require_k(k);
  const double e = e_infinity(p);
  double lo = e + 1e-12;
  double hi = e + 10.0;
  auto g = [&](double x) { return theta_index(p, k, -x); };
  if (!(g(lo) > 0.0 && g(hi) < 0.0)) throw NumericalError("threshold_ek: root not bracketed");
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  const double x = 0.5 * (lo + hi);
  if (std::abs(g(x)) >= 1e-12) {
    throw NumericalError("threshold_ek: residual " + std::to_string(g(x)) + " above 1e-12");
  }
  return x;
}

ThresholdTable threshold_table(int p, int k_max) {
  require_k(k_max);
  ThresholdTable t;
  t.p = p;
  t.e_infinity = e_infinity(p);
  for (int k = 0; k <= k_max; ++k) t.e_k.emplace_back(k, threshold_ek(p, k));
  return t;
}

double reduced_parisi(int p, double c, double d) {
  require_p(p);
  if (!(c > 0.0 && d > 0.0)) throw DomainError("reduced_parisi: c, d must be positive");
  return 0.5 * (c + p * d + std::log1p(c / d) / c);
}

namespace {

using Point = std::array<double, 2>;

struct ParisiModel {
  int p;
  double lo, hi;

  double value(const Point& x) const {
    if (x[0] < lo || x[0] > hi || x[1] < lo || x[1] > hi) {
      return std::numeric_limits<double>::infinity();
    }
    return reduced_parisi(p, x[0], x[1]);
  }

  // Analytic gradient and Hessian of reduced_parisi.
  void derivatives(const Point& x, Point& g, std::array<double, 4>& h) const {
    const double c = x[0], d = x[1], s = c + d;
    const double L = std::log1p(c / d);
    g[0] = 0.5 * (1.0 - L / (c * c) + 1.0 / (c * s));
    g[1] = 0.5 * (p - 1.0 / (d * s));
    const double hcc = 0.5 * (2.0 * L / (c * c * c) - 2.0 / (c * c * s) - 1.0 / (c * s * s));
    const double hdd = 0.5 * (1.0 / (d * d * s) + 1.0 / (d * s * s));
    const double hcd = 0.5 / (d * s * s);
    h = {hcc, hcd, hcd, hdd};
  }
};

struct NelderMeadResult {
  Point x;
  double f;
  int iterations;
};

NelderMeadResult nelder_mead(const ParisiModel& m, Point start, double step) {
  std::array<Point, 3> s{start, start, start};
  s[1][0] += step;
  s[2][1] += step;
  std::array<double, 3> f{};
  for (int i = 0; i < 3; ++i) f[i] = m.value(s[i]);

  int it = 0;
  for (; it < 20000; ++it) {
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return f[a] < f[b]; });
    const int best = idx[0], mid = idx[1], worst = idx[2];
    double diam = 0.0;
    for (int i : {mid, worst}) {
      diam = std::max(diam, std::hypot(s[i][0] - s[best][0], s[i][1] - s[best][1]));
    }
    if (diam < 1e-10 && f[worst] - f[best] < 1e-14) break;

    const Point cen{0.5 * (s[best][0] + s[mid][0]), 0.5 * (s[best][1] + s[mid][1])};
    auto along = [&](double t) {
      return Point{cen[0] + t * (s[worst][0] - cen[0]), cen[1] + t * (s[worst][1] - cen[1])};
    };
    const Point r = along(-1.0);
    const double fr = m.value(r);
    if (fr < f[best]) {
      const Point e = along(-2.0);
      const double fe = m.value(e);
      if (fe < fr) {
        s[worst] = e, f[worst] = fe;
      } else {
        s[worst] = r, f[worst] = fr;
      }
    } else if (fr < f[mid]) {
      s[worst] = r, f[worst] = fr;
    } else {
      const Point c = fr < f[worst] ? along(-0.5) : along(0.5);
      const double fc = m.value(c);
      if (fc < std::min(fr, f[worst])) {
        s[worst] = c, f[worst] = fc;
      } else {
        for (int i : {mid, worst}) {
          s[i] = {0.5 * (s[i][0] + s[best][0]), 0.5 * (s[i][1] + s[best][1])};
          f[i] = m.value(s[i]);
        }
      }
    }
  }
  const int best = static_cast<int>(std::min_element(f.begin(), f.end()) - f.begin());
  return {s[best], f[best], it};
}

VariationalGroundState minimize_in_box(int p, double lo, double hi) {
  const ParisiModel m{p, lo, hi};
  constexpr int kGrid = 50;
  const double g_lo = std::max(0.05, lo), g_hi = std::min(10.0, hi);
  Point seed{g_lo, g_lo};
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const Point x{g_lo + (g_hi - g_lo) * i / (kGrid - 1), g_lo + (g_hi - g_lo) * j / (kGrid - 1)};
      const double v = m.value(x);
      if (v < best) best = v, seed = x;
    }
  }
  const double cell = (g_hi - g_lo) / (kGrid - 1);
  auto nm = nelder_mead(m, seed, 0.5 * cell);

  Point x = nm.x;
  for (int it = 0; it < 50; ++it) {
    Point g;
    std::array<double, 4> h;
    m.derivatives(x, g, h);
    const double det = h[0] * h[3] - h[1] * h[2];
    if (!(det > 0.0 && h[0] > 0.0)) break;
    const Point dx{(h[3] * g[0] - h[1] * g[1]) / det, (h[0] * g[1] - h[2] * g[0]) / det};
    const Point nx{x[0] - dx[0], x[1] - dx[1]};
    if (!(m.value(nx) <= m.value(x) + 1e-15)) break;
    x = nx;
    if (std::hypot(dx[0], dx[1]) < 1e-15 * (1.0 + std::hypot(x[0], x[1]))) break;
  }

  Point g;
  std::array<double, 4> h;
  m.derivatives(x, g, h);
  if (!(std::hypot(g[0], g[1]) < 1e-9)) {
    throw NumericalError("ground_state_variational: no stationary point; |grad P| = " +
                         std::to_string(std::hypot(g[0], g[1])) + " at (c, d) = (" +
                         std::to_string(x[0]) + ", " + std::to_string(x[1]) + ")");
  }
  return {m.value(x), x[0], x[1], lo, hi, nm.iterations};
}

}  // namespace

VariationalGroundState ground_state_variational(int p) {
  require_p(p, 3);
  double lo = 1e-3, hi = 50.0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const auto r = minimize_in_box(p, lo, hi);
    const double margin = 1e-6 * (hi - lo);
    const bool interior =
        r.c > lo + margin && r.c < hi - margin && r.d > lo + margin && r.d < hi - margin;
    if (interior) return r;
    lo /= 10.0;
    hi *= 10.0;
  }
  throw NumericalError("ground_state_variational: minimizer stays on the box boundary");
}

double scalar_g(int p, double a) {
  require_p(p);
  if (!(a > 0.0)) throw DomainError("scalar_g: a must be positive");
  return (a - 1.0) * (a - 1.0) + p * (a - 1.0) - p * a * std::log(a);
}

ScalarGroundState ground_state_scalar(int p) {
  require_p(p, 3);
  double lo = p - 1.0;
  double hi = 2.0 * p;
  if (!(scalar_g(p, lo) < 0.0)) throw NumericalError("ground_state_scalar: g_p(p-1) >= 0");
  for (int i = 0; scalar_g(p, hi) <= 0.0; ++i) {
    if (i > 60) throw NumericalError("ground_state_scalar: failed to bracket root");
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > 1e-15 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (scalar_g(p, mid) < 0.0 ? lo : hi) = mid;
  }
  ScalarGroundState r;
  r.a = 0.5 * (lo + hi);
  r.y = std::sqrt(r.a / p);
  r.gamma = r.y + (p - 1.0) / (r.y * p);
  return r;
}

double cs_minima_complexity(int p, double E) {
  require_p(p);
  const double b2 = 2.0 * (p - 1.0) / p;
  if (!std::isfinite(E) || E > -std::sqrt(b2)) {
    throw DomainError("cs_minima_complexity: requires E <= -sqrt(2(p-1)/p)");
  }
  const double z = (-E - std::sqrt(std::max(0.0, E * E - b2))) / (p - 1.0);
  const double z2 = z * z;
  return 0.5 * ((2.0 - p) / p - std::log(p * z2 / 2.0) + (p - 1.0) * z2 / 2.0 -
                2.0 / (static_cast<double>(p) * p * z2));
}

TotalCountExponents total_count_exponents(int p) {
  require_p(p);
  return {plateau(p), plateau(p) - static_cast<double>(p - 2) / p};
}

}  // namespace pspin::complexity
