#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace pspin::complexity {

/// Degree p (>= 2) and, where finite-N quantities are involved, dimension N.
struct ModelParams {
  int p = 3;
  std::optional<int> N;

  /// Throws DomainError unless p >= 2 and N >= 1 (when present).
  const ModelParams& validated() const;
};

/// Threshold 2 sqrt((p-1)/p) below which fixed-index critical values live.
double e_infinity(int p);

/// Large-deviation cost of pulling the smallest eigenvalue down to u:
/// (2/E_inf^2) * int_u^{-E_inf} sqrt(z^2 - E_inf^2) dz, in closed form.
/// Requires u <= -E_inf(p).
double rate_i1(int p, double u);

enum class ThetaBranch { below_edge, bulk, above_zero };

/// Exponential growth rate of the mean number of critical values below Nu.
double theta_total(int p, double u);
/// Same, restricted to critical points of index k.
double theta_index(int p, int k, double u);

/// The analytic expression of a single branch, evaluated wherever its
/// formula makes sense (used to check continuity at the branch points).
/// theta_index has only the below_edge and bulk branches; above_zero maps to
/// the bulk plateau.
double theta_total_branch(int p, ThetaBranch branch, double u);
double theta_index_branch(int p, int k, ThetaBranch branch, double u);

/// E_k(p): the root x > E_inf of theta_index(p, k, -x) = 0. p >= 3.
double threshold_ek(int p, int k);

struct ThresholdTable {
  int p = 0;
  double e_infinity = 0.0;
  std::vector<std::pair<int, double>> e_k;  // (k, E_k), k = 0..k_max
};

ThresholdTable threshold_table(int p, int k_max);

/// Zero-temperature limit of the reduced one-step Parisi functional,
/// 1/2 {c + p d + (log(c + d) - log d) / c}.
double reduced_parisi(int p, double c, double d);

struct VariationalGroundState {
  double gamma = 0.0;  // inf of reduced_parisi over the box
  double c = 0.0;
  double d = 0.0;
  double box_lo = 0.0;
  double box_hi = 0.0;
  int iterations = 0;
};

/// Minimizes reduced_parisi over [1e-3, 50]^2 (grid seed, Nelder-Mead,
/// Newton polish). Widens the box if the minimizer lands on its boundary.
VariationalGroundState ground_state_variational(int p);

/// g_p(a) = (a-1)^2 + p(a-1) - p a log a.
double scalar_g(int p, double a);

struct ScalarGroundState {
  double gamma = 0.0;
  double a = 0.0;  // root of g_p on (p-1, inf)
  double y = 0.0;  // sqrt(a/p)
};

ScalarGroundState ground_state_scalar(int p);

/// Minima complexity in the normalization where the Hamiltonian carries an
/// extra 2^{-1/2}; equals theta_index(p, 0, sqrt(2) E).
/// Requires E <= -sqrt(2(p-1)/p).
double cs_minima_complexity(int p, double E);

struct TotalCountExponents {
  double total = 0.0;      // lim (1/N) log E Crt_N(R)
  double per_index = 0.0;  // lim (1/N) log E Crt_{N,k}(R), any fixed k
};

TotalCountExponents total_count_exponents(int p);

}  // namespace pspin::complexity
