#pragma once

#include <vector>

namespace pspin::tap {

struct TapParams {
  int p = 3;
  double beta = 1.0;

  /// Throws DomainError unless p >= 3 and beta > 0.
  const TapParams& validated() const;
};

/// Onsager term B(q) = -log(1-q)/(2 beta) - (beta/4)(1 + (p-1) q^p - p q^{p-1})
/// and its first two q-derivatives. q in [0, 1).
double onsager_b(int p, double beta, double q);
double onsager_b_prime(int p, double beta, double q);
double onsager_b_second(int p, double beta, double q);

/// TAP functional in spherical coordinates, 2^{-1/2} q^{p/2} h + B(q), at
/// normalized energy h, with its q-derivatives.
double tap_functional(int p, double beta, double h, double q);
double tap_functional_dq(int p, double beta, double h, double q);
double tap_functional_d2q(int p, double beta, double h, double q);

/// Closed form of the q-curvature valid on the stationary set:
/// -p^2 (p-1) / (8 q beta (1-q)^2) (q - (p-2)/p) (beta^2 z^2 - 2/(p(p-1))).
double tap_curvature_factored(int p, double beta, double q);

/// z(q) = (1-q) q^{p/2-1} and its maximum (2/p)((p-2)/p)^{(p-2)/2} at q = (p-2)/p.
double z_of_q(int p, double q);
double z_max(int p);

/// beta(u) = p / (2^{3/2}(p-1)) (p/(p-2))^{(p-2)/2} (-u - sqrt(u^2 - E_inf^2)),
/// for u <= -E_inf.
double beta_of_u(int p, double u);

/// sup{v <= -E_inf : beta(v) < beta}; -E_inf once beta >= beta(-E_inf).
double u_star(int p, double beta);

/// The two values of beta z solving the stationarity quadratic
/// 2^{-1/2}(p-1)(beta z)^2 + h (beta z) + 2^{1/2}/p = 0, ascending.
/// Empty when h > -E_inf.
std::vector<double> beta_z_roots(int p, double h);

struct TapRoots {
  double h = 0.0;
  double z = 0.0;          // z on the small beta z branch (0 when h > -E_inf)
  std::vector<double> q;   // q1 < (p-2)/p < q2, a single double root, or empty
  /// Roots of z(q) = z on the large beta z branch. Present only for large
  /// beta at fixed h; not part of the stationary structure counted by the
  /// complexity formula.
  std::vector<double> upper_branch_q;
};

TapRoots solve_q(int p, double beta, double h);

/// Sign (-1, 0, +1) of the factored q-curvature at a stationary (q, h).
/// Zero exactly at the double root q = (p-2)/p (to 1e-12).
int q_curvature_sign(int p, double beta, double h, double q);

struct TapComplexity {
  double value = 0.0;       // Theta_{0,p}(u* ^ u) for k = 0, Theta_{k-1,p}(u* ^ u) otherwise
  double level = 0.0;       // u* ^ u
  bool vanishing = false;   // beta < beta(-E_{(k-1) v 0}) or u < -E_{(k-1) v 0}
};

/// Requires p >= 3, beta > 0, k >= 0 and u <= -E_inf.
TapComplexity tap_complexity(int p, int k, double u, double beta);

}  // namespace pspin::tap
