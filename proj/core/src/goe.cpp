#include "pspin/goe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "pspin/error.hpp"

namespace pspin::goe {

namespace {

void require_size(int N) {
  if (N < 1) throw DomainError("GOE size N must be >= 1, got " + std::to_string(N));
}

void require_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("GOE sigma must be positive");
}

void require_samples(std::int64_t n) {
  if (n < 1) throw DomainError("n_samples must be >= 1");
}

// Splits n_samples into fixed blocks; block b always uses stream b of the
// seed, so the result does not depend on the worker count.
template <class Fn>
auto run_sample_blocks(std::int64_t n_samples, std::uint64_t seed, const McOptions& opt, Fn&& fn) {
  const std::int64_t bs = std::max<std::int64_t>(1, opt.block_size);
  const auto n_blocks = static_cast<std::size_t>((n_samples + bs - 1) / bs);
  const int threads = opt.threads > 0 ? opt.threads : default_thread_count();
  return run_blocks(n_blocks, threads, [&](std::size_t b) {
    Engine rng = make_engine(seed, b);
    const std::int64_t count = std::min<std::int64_t>(bs, n_samples - static_cast<std::int64_t>(b) * bs);
    return fn(rng, count);
  });
}

McEstimate finish(double log_prefactor, double sum, double sum_sq, std::int64_t n) {
  McEstimate e;
  e.n_samples = n;
  const double dn = static_cast<double>(n);
  const double mean = sum / dn;
  const double var = n > 1 ? std::max(0.0, (sum_sq - dn * mean * mean) / (dn - 1.0)) : 0.0;
  const LogReal c = LogReal::from_log(log_prefactor);
  e.estimate = c * LogReal::from_double(mean);
  e.std_error = c * LogReal::from_double(std::sqrt(var / dn));
  return e;
}

double identity_log_prefactor(int p, int N) {
  return std::log(2.0) + 0.5 * std::log(2.0 / p) + 0.5 * N * std::log(p - 1.0);
}

struct Moments {
  std::vector<double> sum, sum_sq;
};

}  // namespace

Eigen::MatrixXd goe_matrix(int N, double sigma, Engine& rng) {
  require_size(N);
  require_sigma(sigma);
  std::normal_distribution<double> gauss;
  const double off = sigma / std::sqrt(static_cast<double>(N));
  const double diag = off * std::sqrt(2.0);
  Eigen::MatrixXd m(N, N);
  for (int i = 0; i < N; ++i) {
    m(i, i) = diag * gauss(rng);
    for (int j = i + 1; j < N; ++j) m(i, j) = m(j, i) = off * gauss(rng);
  }
  return m;
}

GoeSample sample_goe(int N, double sigma, Engine& rng) {
  const Eigen::MatrixXd m = goe_matrix(N, sigma, rng);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("sample_goe: eigensolver did not converge");
  GoeSample s;
  s.N = N;
  s.sigma = sigma;
  s.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + N);
  return s;
}

GoeSample sample_goe(int N, double sigma, std::uint64_t seed, std::uint64_t stream) {
  Engine rng = make_engine(seed, stream);
  return sample_goe(N, sigma, rng);
}

Tridiagonal sample_goe_tridiagonal(int N, double sigma, Engine& rng) {
  require_size(N);
  require_sigma(sigma);
  std::normal_distribution<double> gauss;
  std::gamma_distribution<double> gamma;
  const double s = sigma / std::sqrt(static_cast<double>(N));
  Tridiagonal t;
  t.diagonal.resize(N);
  t.off_diagonal.resize(N - 1);
  for (int i = 0; i < N; ++i) t.diagonal[i] = std::sqrt(2.0) * s * gauss(rng);
  for (int i = 0; i + 1 < N; ++i) {
    const double dof = N - 1 - i;
    const double chi2 = gamma(rng, std::gamma_distribution<double>::param_type(0.5 * dof, 2.0));
    t.off_diagonal[i] = s * std::sqrt(chi2);
  }
  return t;
}

int count_below(const Tridiagonal& t, double x) {
  const auto n = t.diagonal.size();
  int count = 0;
  double d = 1.0;
  constexpr double kTiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  for (std::size_t i = 0; i < n; ++i) {
    const double b2 = i > 0 ? t.off_diagonal[i - 1] * t.off_diagonal[i - 1] : 0.0;
    d = t.diagonal[i] - x - (i > 0 ? b2 / d : 0.0);
    if (d == 0.0) d = -kTiny;
    if (d < 0.0) ++count;
  }
  return count;
}

McIdentityTable mc_identity_rhs_all(int p, int N, const IntervalSet& B, std::int64_t n_samples,
                                    std::uint64_t seed, const McOptions& opt) {
  if (p < 2) throw DomainError("mc_identity_rhs: p must be >= 2");
  require_size(N);
  require_samples(n_samples);
  const double c = std::sqrt(p / (2.0 * (p - 1.0)));
  const IntervalSet scaled = B.scaled(c);
  const double a = N * (p - 2.0) / (2.0 * p);

  auto blocks = run_sample_blocks(n_samples, seed, opt, [&](Engine& rng, std::int64_t count) {
    Moments m{std::vector<double>(N + 1, 0.0), std::vector<double>(N + 1, 0.0)};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(N);
    for (std::int64_t s = 0; s < count; ++s) {
      es.compute(goe_matrix(N, kStandardSigma, rng), Eigen::EigenvaluesOnly);
      if (es.info() != Eigen::Success) throw NumericalError("mc_identity_rhs: eigensolver failed");
      double total = 0.0;
      for (int k = 0; k < N; ++k) {
        const double lam = es.eigenvalues()[k];
        const double w = scaled.contains(lam) ? std::exp(-a * lam * lam) : 0.0;
        m.sum[k] += w;
        m.sum_sq[k] += w * w;
        total += w;
      }
      m.sum[N] += total;
      m.sum_sq[N] += total * total;
    }
    return m;
  });

  std::vector<double> sum(N + 1, 0.0), sum_sq(N + 1, 0.0);
  for (const auto& b : blocks) {
    for (int k = 0; k <= N; ++k) {
      sum[k] += b.sum[k];
      sum_sq[k] += b.sum_sq[k];
    }
  }
  const double lp = identity_log_prefactor(p, N);
  McIdentityTable t;
  for (int k = 0; k < N; ++k) t.per_index.push_back(finish(lp, sum[k], sum_sq[k], n_samples));
  t.summed = finish(lp, sum[N], sum_sq[N], n_samples);
  return t;
}

McEstimate mc_identity_rhs(int p, int N, int k, const IntervalSet& B, std::int64_t n_samples,
                           std::uint64_t seed, const McOptions& opt) {
  require_size(N);
  if (k < 0 || k >= N) throw DomainError("mc_identity_rhs: index k must lie in [0, N-1]");
  return mc_identity_rhs_all(p, N, B, n_samples, seed, opt).per_index[k];
}

double ldp_rate(int k, double x, double sigma) {
  if (k < 1) throw DomainError("ldp_rate: k must be >= 1");
  require_sigma(sigma);
  if (std::isnan(x)) throw DomainError("ldp_rate: x is NaN");
  const double w = x / (2.0 * sigma);
  if (w < 1.0) return std::numeric_limits<double>::infinity();
  const double s = std::sqrt((w - 1.0) * (w + 1.0));
  return k * (w * s - std::log(w + s));
}

TailEstimate tail_estimate(int N, int k, double x, std::int64_t n_samples, std::uint64_t seed,
                           const McOptions& opt) {
  require_size(N);
  require_samples(n_samples);
  if (k < 1 || k > N) throw DomainError("tail_estimate: k must lie in [1, N]");
  if (!(x > std::numbers::sqrt2)) throw DomainError("tail_estimate: requires x > sqrt(2)");
  auto blocks = run_sample_blocks(n_samples, seed, opt, [&](Engine& rng, std::int64_t count) {
    std::int64_t hits = 0;
    for (std::int64_t s = 0; s < count; ++s) {
      const auto t = sample_goe_tridiagonal(N, kStandardSigma, rng);
      if (N - count_below(t, x) >= k) ++hits;
    }
    return hits;
  });
  TailEstimate e;
  e.n_samples = n_samples;
  for (auto h : blocks) e.hits += h;
  if (e.hits > 0) {
    e.probability = static_cast<double>(e.hits) / static_cast<double>(n_samples);
  } else {
    e.is_bound = true;
    e.probability = -std::expm1(std::log(0.05) / static_cast<double>(n_samples));
  }
  e.rate = -std::log(e.probability) / N;
  return e;
}

double semicircle_density(double x, double sigma) {
  require_sigma(sigma);
  const double r2 = 4.0 * sigma * sigma - x * x;
  if (r2 <= 0.0) return 0.0;
  return std::sqrt(r2) / (2.0 * std::numbers::pi * sigma * sigma);
}

SpectralMeasure spectral_histogram(int N, double sigma, int bins, double lo, double hi,
                                   std::int64_t n_samples, std::uint64_t seed,
                                   const McOptions& opt) {
  require_size(N);
  require_sigma(sigma);
  require_samples(n_samples);
  if (bins < 1 || !(lo < hi)) throw DomainError("spectral_histogram: need bins >= 1 and lo < hi");
  const double width = (hi - lo) / bins;
  auto blocks = run_sample_blocks(n_samples, seed, opt, [&](Engine& rng, std::int64_t count) {
    Moments m{std::vector<double>(bins, 0.0), std::vector<double>(bins, 0.0)};
    std::vector<int> counts(bins);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(N);
    for (std::int64_t s = 0; s < count; ++s) {
      es.compute(goe_matrix(N, sigma, rng), Eigen::EigenvaluesOnly);
      if (es.info() != Eigen::Success) throw NumericalError("spectral_histogram: eigensolver failed");
      std::fill(counts.begin(), counts.end(), 0);
      for (int i = 0; i < N; ++i) {
        const int b = static_cast<int>(std::floor((es.eigenvalues()[i] - lo) / width));
        ++counts[std::clamp(b, 0, bins - 1)];
      }
      for (int b = 0; b < bins; ++b) {
        const double f = static_cast<double>(counts[b]) / N;
        m.sum[b] += f;
        m.sum_sq[b] += f * f;
      }
    }
    return m;
  });
  SpectralMeasure h;
  h.n_samples = n_samples;
  h.lo = lo;
  h.hi = hi;
  h.weights.assign(bins, 0.0);
  h.std_errors.assign(bins, 0.0);
  std::vector<double> sum_sq(bins, 0.0);
  for (const auto& b : blocks) {
    for (int i = 0; i < bins; ++i) {
      h.weights[i] += b.sum[i];
      sum_sq[i] += b.sum_sq[i];
    }
  }
  const double n = static_cast<double>(n_samples);
  for (int i = 0; i < bins; ++i) {
    const double mean = h.weights[i] / n;
    const double var = n > 1 ? std::max(0.0, (sum_sq[i] - n * mean * mean) / (n - 1.0)) : 0.0;
    h.weights[i] = mean;
    h.std_errors[i] = std::sqrt(var / n);
  }
  return h;
}

}  // namespace pspin::goe
