#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "pspin/error.hpp"

namespace pspin::quad {

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_intervals = 20000;
  /// The range is first cut into this many equal panels; oscillatory
  /// integrands need roughly one panel per half period.
  int initial_panels = 1;
};

struct Result {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  int intervals = 0;
  bool converged = false;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel kronrod15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::fabs(resk);
  std::array<double, 7> f1{}, f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double s = f1[j] + f2[j];
    resk += kWgk[j] * s;
    resabs += kWgk[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * s;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));
  const double ahalf = std::fabs(half);
  resasc *= ahalf;
  resabs *= ahalf;
  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
  return {a, b, resk * half, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on a finite interval.
template <class F>
Result integrate(F&& f, double a, double b, const Options& opt = {}) {
  if (!(std::isfinite(a) && std::isfinite(b)))
    throw DomainError("quad::integrate: limits must be finite");
  Result r;
  if (a == b) {
    r.converged = true;
    return r;
  }
  std::priority_queue<detail::Panel> heap;
  const int panels = std::max(1, opt.initial_panels);
  double total = 0.0, total_err = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + (b - a) * i / panels;
    const double hi = (i + 1 == panels) ? b : a + (b - a) * (i + 1) / panels;
    auto p = detail::kronrod15(f, lo, hi);
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }
  r.evaluations = 15 * panels;
  auto done = [&] { return total_err <= std::max(opt.abs_tol, opt.rel_tol * std::fabs(total)); };
  while (!done() && static_cast<int>(heap.size()) < opt.max_intervals) {
    const auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) {  // interval exhausted at double resolution
      heap.push(worst);
      break;
    }
    auto left = detail::kronrod15(f, worst.a, mid);
    auto right = detail::kronrod15(f, mid, worst.b);
    r.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  total = 0.0;
  total_err = 0.0;
  r.intervals = static_cast<int>(heap.size());
  while (!heap.empty()) {
    total += heap.top().value;
    total_err += heap.top().error;
    heap.pop();
  }
  r.value = total;
  r.abs_error = total_err;
  r.converged = done();
  return r;
}

/// As integrate(), but a missed tolerance is a NumericalError naming `what`
/// and the achieved error.
template <class F>
Result integrate_checked(F&& f, double a, double b, const Options& opt, const std::string& what) {
  auto r = integrate(std::forward<F>(f), a, b, opt);
  if (!r.converged)
    throw NumericalError(what + ": quadrature did not converge (value " + std::to_string(r.value) +
                         ", achieved abs error " + std::to_string(r.abs_error) + " after " +
                         std::to_string(r.intervals) + " intervals)");
  return r;
}

}  // namespace pspin::quad
