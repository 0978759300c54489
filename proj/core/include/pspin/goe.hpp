#pragma once

#include <cstdint>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "pspin/interval.hpp"
#include "pspin/log_real.hpp"
#include "pspin/rng.hpp"

namespace pspin::goe {

/// Variance scale of the main-text convention, E M_ij^2 = (1 + delta_ij) / (2N).
inline constexpr double kStandardSigma = std::numbers::sqrt2 / 2.0;

struct GoeSample {
  int N = 0;
  double sigma = 0.0;
  std::vector<double> eigenvalues;  // ascending
};

/// Symmetric N x N matrix with independent centered Gaussian entries of
/// variance sigma^2 (1 + delta_ij) / N.
Eigen::MatrixXd goe_matrix(int N, double sigma, Engine& rng);

/// Eigenvalues of goe_matrix() by a dense symmetric eigensolve.
GoeSample sample_goe(int N, double sigma, Engine& rng);
GoeSample sample_goe(int N, double sigma, std::uint64_t seed, std::uint64_t stream = 0);

/// Tridiagonal matrix with the same eigenvalue law as goe_matrix(): diagonal
/// and the N-1 off-diagonal entries (chi-distributed with N-1, ..., 1 degrees
/// of freedom, suitably scaled). O(N) to draw.
struct Tridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;
};

Tridiagonal sample_goe_tridiagonal(int N, double sigma, Engine& rng);

/// Number of eigenvalues of `t` strictly below `x` (Sturm sequence count).
int count_below(const Tridiagonal& t, double x);

struct McEstimate {
  LogReal estimate;
  LogReal std_error;
  std::int64_t n_samples = 0;
};

struct McOptions {
  int threads = 0;  // 0: default_thread_count()
  std::int64_t block_size = 4096;
};

/// Monte Carlo value of
///   2 sqrt(2/p) (p-1)^{N/2} E[exp(-N (p-2) lambda_k^2 / (2p)) 1{lambda_k in cB}]
/// with c = sqrt(p / (2(p-1))) and lambda_k the (k+1)-th smallest eigenvalue
/// of an N x N GOE matrix in the main-text convention.
McEstimate mc_identity_rhs(int p, int N, int k, const IntervalSet& B, std::int64_t n_samples,
                           std::uint64_t seed, const McOptions& opt = {});

struct McIdentityTable {
  std::vector<McEstimate> per_index;  // k = 0..N-1
  McEstimate summed;                  // per-sample sum over k
};

/// All indices from the same draws; the summed standard error accounts for
/// the correlation between indices.
McIdentityTable mc_identity_rhs_all(int p, int N, const IntervalSet& B, std::int64_t n_samples,
                                    std::uint64_t seed, const McOptions& opt = {});

/// I_k(x; sigma) = k int_{2 sigma}^x sigma^{-1} sqrt((z / 2 sigma)^2 - 1) dz,
/// +infinity below 2 sigma.
double ldp_rate(int k, double x, double sigma);

struct TailEstimate {
  double rate = 0.0;  // -(1/N) log P, or a lower bound on it when is_bound
  bool is_bound = false;
  double probability = 0.0;  // hits / n, or the 95% upper bound when hits = 0
  std::int64_t hits = 0;
  std::int64_t n_samples = 0;
};

/// Monte Carlo of -(1/N) log P[k-th largest eigenvalue >= x] in the
/// main-text convention, using the tridiagonal model.
TailEstimate tail_estimate(int N, int k, double x, std::int64_t n_samples, std::uint64_t seed,
                           const McOptions& opt = {});

/// (2 pi sigma^2)^{-1} sqrt(4 sigma^2 - x^2) on |x| <= 2 sigma.
double semicircle_density(double x, double sigma);

struct SpectralMeasure {
  std::int64_t n_samples = 0;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> weights;     // mean fraction of eigenvalues per bin
  std::vector<double> std_errors;  // standard error of each weight
};

/// Histogram of the pooled eigenvalues of n_samples GOE draws. Values
/// outside [lo, hi) are counted in the outermost bins, so weights sum to 1.
SpectralMeasure spectral_histogram(int N, double sigma, int bins, double lo, double hi,
                                   std::int64_t n_samples, std::uint64_t seed,
                                   const McOptions& opt = {});

}  // namespace pspin::goe
