#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pspin/interval.hpp"
#include "pspin/landscape.hpp"

namespace pspin::landscape {

struct EnumerationOptions {
  int saturation = 200;         // stop after this many consecutive starts find nothing new
  int max_starts = 20000;
  int lattice_starts = 64;      // Fibonacci lattice starts (N = 3 only)
  int retries = 2;              // reruns with doubled saturation when the certificate fails
  double dedup_radius = 1e-5;
  double degeneracy = 1e-7;     // |Hessian eigenvalue| below this rejects a point
  double residual_tol = 1e-9;
  int max_newton_iterations = 100;
};

/// A critical point of f on the unit sphere. Hessian eigenvalues are those
/// of the unit-sphere Riemannian Hessian of f (the radius-sqrt(N) Hessian
/// of H is N^{-1/2} times these; signs and hence the index agree).
struct CriticalPoint {
  Eigen::VectorXd position;
  double normalized_energy = 0.0;
  int index = 0;
  std::vector<double> hessian_spectrum;
  double residual = 0.0;
};

struct EnumerationReport {
  std::uint64_t seed = 0;
  int p = 0;
  int N = 0;
  std::vector<CriticalPoint> points;
  std::map<int, int> counts;  // index -> number of points
  bool morse_ok = false;
  int rejected = 0;           // converged points rejected as degenerate
  int starts_used = 0;
  int last_new_start = 0;

  /// Accepted iff the Morse certificate holds and no point was degenerate.
  [[nodiscard]] bool accepted() const { return morse_ok && rejected == 0; }
  [[nodiscard]] int count(int k, const IntervalSet& B) const;
};

/// Alternating index sum required by Morse theory on S^{N-1}.
int morse_target(int N);

struct NewtonResult {
  bool converged = false;
  Eigen::VectorXd x;
  double residual = 0.0;
  int iterations = 0;
};

/// Damped Riemannian Newton iteration for grad f = 0 on the unit sphere,
/// with Armijo backtracking on |grad f|^2 / 2 and retraction by normalization.
NewtonResult newton_critical_point(const LandscapeInstance& inst, const Eigen::VectorXd& x0,
                                   const EnumerationOptions& opt = {});

/// Multistart Newton until saturation; see EnumerationOptions. Throws
/// DomainError outside N <= 6, p <= 4 unless `force` is set.
EnumerationReport enumerate_critical_points(const LandscapeInstance& inst, const EnumerationOptions& opt = {},
                                            bool force = false);

std::string to_json(const EnumerationReport& report, int indent = 2);

/// Minimum normalized energy over the report's points. Throws
/// NumericalError when the report is not accepted.
double ground_state_of_instance(const EnumerationReport& report);
double ground_state_of_instance(const LandscapeInstance& inst, const EnumerationOptions& opt = {});

struct CrtStatistics {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Per-(B, k) statistics of Crt_{N,k}(B) over independent instances, all
/// from the same enumerations. Instance i uses seed stream_seed(seed, i).
struct CrtTable {
  int p = 0;
  int N = 0;
  std::vector<IntervalSet> sets;
  std::vector<std::vector<CrtStatistics>> per_index;  // [set][k]
  std::vector<CrtStatistics> summed;                  // [set], sum over k
  std::int64_t n_instances = 0;
  std::int64_t accepted = 0;
  std::int64_t rejected = 0;
  [[nodiscard]] double rejection_rate() const {
    return n_instances > 0 ? static_cast<double>(rejected) / static_cast<double>(n_instances) : 0.0;
  }
};

struct CrtOptions {
  EnumerationOptions enumeration;
  int threads = 0;  // 0: default_thread_count()
  double max_rejection_rate = 0.05;
};

/// Throws NumericalError when more than max_rejection_rate of the
/// instances fail the certificate.
CrtTable empirical_crt_table(int p, int N, const std::vector<IntervalSet>& sets, std::int64_t n_instances,
                             std::uint64_t seed, const CrtOptions& opt = {});

CrtStatistics empirical_crt_statistics(int p, int N, int k, const IntervalSet& B, std::int64_t n_instances,
                                       std::uint64_t seed, const CrtOptions& opt = {});

}  // namespace pspin::landscape
