#pragma once

#include <utility>
#include <vector>

#include "pspin/airy.hpp"
#include "pspin/hermite.hpp"
#include "pspin/interval.hpp"
#include "pspin/log_real.hpp"

namespace pspin::specfun {

/// J_N(x) = int eps(sqrt(N) x - t) phi_N(t) dt with eps = sign/2, by
/// adaptive quadrature of the parity-reduced one-sided integral.
double j_integral(int N, double x);

/// Same quantity from the exact recurrence for the partial integrals
/// int_0^y phi_n. O(N) and used inside the GOE density.
double j_integral_recurrence(int N, double x);

/// Density of the mean empirical spectral measure of an N x N GOE matrix
/// with E M_ij^2 = (1 + delta_ij) / (2N). Even in x.
LogReal rho_n_log(int N, double x);
double rho_n(int N, double x);

struct DensityCurve {
  int N = 0;
  std::vector<std::pair<double, double>> grid;  // (x, rho_N(x))
};

DensityCurve density_curve(int N, double lo, double hi, int points);

/// psi(x) = |x^2 - 2|^{1/2}.
double edge_psi(double x);
/// Ibar(x) = int_sqrt2^x psi(y) dy for x >= sqrt 2.
double edge_ibar(double x);
/// h(x) = |(x - sqrt2)/(x + sqrt2)|^{1/4} + |(x + sqrt2)/(x - sqrt2)|^{1/4}.
double edge_h(double x);

/// Leading Plancherel-Rotach approximation of phi_N(sqrt(N) x) outside the
/// bulk: exp(-N Ibar(x)) h(x) / sqrt(4 pi sqrt(2N)). Requires x > sqrt2 + 0.05.
LogReal pr_asymptotic(int N, double x);

/// Mean number of critical values of the p-spin Hamiltonian in N B,
/// 2N sqrt(2/p) (p-1)^{N/2} int_{cB} exp(-N (p-2) x^2 / (2p)) rho_N(x) dx with
/// c = sqrt(p / (2(p-1))), by adaptive quadrature (relative error < 1e-8).
LogReal exact_mean_total(int p, int N, const IntervalSet& B);

}  // namespace pspin::specfun
