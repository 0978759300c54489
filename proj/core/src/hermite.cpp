#include "pspin/hermite.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pspin/error.hpp"

namespace pspin::specfun {

namespace {

constexpr double kLn2 = std::numbers::ln2;

void require_index(int j) {
  if (j < 0) throw DomainError("Hermite index must be >= 0, got " + std::to_string(j));
}

}  // namespace

HermiteWalker::HermiteWalker(double x)
    : x_(x), log_scale_(-0.5 * x * x - 0.25 * std::log(std::numbers::pi)) {
  if (!std::isfinite(x)) throw DomainError("HermiteWalker: x must be finite");
  scale_factor_ = std::exp(log_scale_);
}

void HermiteWalker::advance() {
  const double n = j_;
  const double next = x_ * std::sqrt(2.0 / (n + 1.0)) * cur_ - std::sqrt(n / (n + 1.0)) * prev_;
  prev_ = cur_;
  cur_ = next;
  ++j_;
  const double m = std::max(std::fabs(prev_), std::fabs(cur_));
  if (m > 0x1p+400 || m < 0x1p-400) {
    int e = 0;
    std::frexp(m, &e);
    prev_ = std::ldexp(prev_, -e);
    cur_ = std::ldexp(cur_, -e);
    log_scale_ += e * kLn2;
    scale_factor_ = std::exp(log_scale_);
  }
}

void HermiteWalker::advance_to(int j) {
  while (j_ < j) advance();
}

double HermiteWalker::value_double() const { return cur_ * scale_factor_; }

LogReal HermiteWalker::scaled(double v) const {
  if (v == 0.0) return LogReal::zero();
  return LogReal::from_log(log_scale_ + std::log(std::fabs(v)), v > 0.0 ? 1 : -1);
}

LogReal hermite_phi(int j, double x) {
  require_index(j);
  HermiteWalker w(x);
  w.advance_to(j);
  return w.value();
}

std::vector<LogReal> hermite_phi_all(int j_max, double x) {
  require_index(j_max);
  std::vector<LogReal> out;
  out.reserve(j_max + 1);
  HermiteWalker w(x);
  out.push_back(w.value());
  for (int j = 1; j <= j_max; ++j) {
    w.advance();
    out.push_back(w.value());
  }
  return out;
}

HermiteTriple hermite_triple(int n, double x) {
  require_index(n);
  HermiteWalker w(x);
  w.advance_to(n);
  HermiteTriple t;
  t.below = n > 0 ? w.previous() : LogReal::zero();
  t.at = w.value();
  w.advance();
  t.above = w.value();
  return t;
}

double hermite_total_integral(int n) {
  require_index(n);
  if (n % 2 == 1) return 0.0;
  double t = std::sqrt(2.0) * std::pow(std::numbers::pi, 0.25);
  for (int m = 0; m + 2 <= n; m += 2) t *= std::sqrt((m + 1.0) / (m + 2.0));
  return t;
}

LogReal christoffel_darboux_sum(int N, double y) {
  if (N < 1) throw DomainError("christoffel_darboux_sum: N must be >= 1");
  const auto t = hermite_triple(N, y);
  const double n = N;
  return LogReal::from_double(n) * t.at * t.at -
         LogReal::from_double(std::sqrt(n * (n + 1.0))) * t.below * t.above;
}

}  // namespace pspin::specfun
