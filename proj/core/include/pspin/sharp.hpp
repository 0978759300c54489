#pragma once

#include <string>
#include <vector>

#include "pspin/log_real.hpp"

namespace pspin::sharp {

enum class SharpRegime { below_edge, at_edge, bulk, positive };

/// below_edge: u < -E_inf; at_edge: |u + E_inf| <= 1e-12; bulk: u in
/// (-E_inf, 0); positive: u >= 0.
SharpRegime regime(int p, double u);
const char* to_string(SharpRegime r);

/// Edge quantities at v = -u sqrt(p / (2(p-1))) for u < -E_inf.
struct EdgeFunctions {
  double v = 0.0;
  double psi = 0.0;          // sqrt(v^2 - 2)
  double i_bar = 0.0;        // int_sqrt2^v psi
  double i_bar_prime = 0.0;  // = psi
  double h = 0.0;
  double phi = 0.0;          // -(p-2) v^2 / (2p)
  double phi_prime = 0.0;    // -(p-2) v / p
};

EdgeFunctions edge_functions(int p, double u);

/// Leading-order asymptotics of the mean number of critical values below
/// N u, by regime:
///   below_edge  h(v) / sqrt(2 p pi) e^{Ibar(v) - v Ibar'(v)/2} / (Ibar'(v) - phi'(v)) N^{-1/2} e^{N Theta_p(u)}
///   at_edge     2 Ai(0) sqrt(2p) / (3(p-2)) N^{-1/3} e^{N Theta_p(-E_inf)}
///   bulk        2 sqrt(2p (E_inf^2 - u^2)) / ((2-p) pi u) e^{N Theta_p(u)}
///   positive    4 sqrt2 / sqrt(pi (p-2)) N^{1/2} e^{N Theta_p(0)}, half of it at u = 0.
/// Requires p >= 3.
LogReal sharp_mean_total(int p, int N, double u);

enum class MinimaDenominator {
  minus_phi_prime,  // Ibar'(v) - phi'(v), the below_edge prefactor of sharp_mean_total
  plus_phi_prime,   // Ibar'(v) + phi'(v); changes sign near the edge
};

/// Leading-order asymptotics of the mean number of local minima below N u,
/// u < -E_inf. Minima dominate there, so with the default denominator this
/// equals sharp_mean_total's below_edge value.
LogReal sharp_mean_minima(int p, int N, double u,
                          MinimaDenominator denominator = MinimaDenominator::minus_phi_prime);

struct ComparisonRow {
  int p = 0;
  double u = 0.0;
  int N = 0;
  double exact_log = 0.0;
  double sharp_log = 0.0;
  double rel_dev = 0.0;  // |sharp / exact - 1|
};

/// Sharp asymptotics against the exact quadrature for each N (<= 400).
std::vector<ComparisonRow> compare_exact_sharp(int p, double u, const std::vector<int>& N_list,
                                               int threads = 0);

/// CSV with header p,u,N,exact_log,sharp_log,rel_dev.
std::string to_csv(const std::vector<ComparisonRow>& rows);

}  // namespace pspin::sharp
