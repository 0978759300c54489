#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "pspin/landscape.hpp"

namespace pspin::testing {

/// Welford accumulator.
class RunningStats {
 public:
  void add(double x) {
    ++n_;
    const double d = x - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (x - mean_);
  }
  [[nodiscard]] std::int64_t count() const { return n_; }
  [[nodiscard]] double mean() const { return mean_; }
  [[nodiscard]] double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
  [[nodiscard]] double std_error() const { return std::sqrt(variance() / static_cast<double>(n_)); }

 private:
  std::int64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Kolmogorov survival function Q(lambda) = 2 sum_k (-1)^{k-1} exp(-2 k^2 lambda^2).
inline double kolmogorov_q(double lambda) {
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 ? 1.0 : -1.0) * term;
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// Two-sample Kolmogorov-Smirnov test with the Stephens small-sample correction.
inline KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double ne = std::sqrt(na * nb / (na + nb));
  return {d, kolmogorov_q((ne + 0.12 + 0.11 / ne) * d)};
}

/// H(sigma) straight from the defining sum over all N^p index tuples.
inline double naive_hamiltonian(const landscape::LandscapeInstance& inst, const Eigen::VectorXd& sigma) {
  const int N = inst.N();
  const int p = inst.p();
  const auto& J = inst.coefficients();
  std::vector<int> idx(p, 0);
  double sum = 0.0;
  for (std::size_t flat = 0; flat < J.size(); ++flat) {
    double term = J[flat];
    for (int a = 0; a < p; ++a) term *= sigma[idx[a]];
    sum += term;
    for (int a = p - 1; a >= 0; --a) {
      if (++idx[a] < N) break;
      idx[a] = 0;
    }
  }
  return std::pow(static_cast<double>(N), -(p - 1) / 2.0) * sum;
}

inline Eigen::VectorXd random_unit(int N, std::uint64_t seed) {
  Engine rng = make_engine(seed, 0);
  std::normal_distribution<double> g;
  Eigen::VectorXd x(N);
  for (int i = 0; i < N; ++i) x[i] = g(rng);
  return x.normalized();
}

}  // namespace pspin::testing
