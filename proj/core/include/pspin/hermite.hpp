#pragma once

#include <vector>

#include "pspin/log_real.hpp"

namespace pspin::specfun {

/// Walks the orthonormal Hermite functions phi_0(x), phi_1(x), ... with the
/// three-term recurrence. The pair (phi_{j-1}, phi_j) is held as doubles
/// against a shared log scale, renormalized by powers of two, so no index or
/// argument overflows.
class HermiteWalker {
 public:
  explicit HermiteWalker(double x);

  void advance();
  void advance_to(int j);

  [[nodiscard]] int index() const { return j_; }
  [[nodiscard]] double x() const { return x_; }
  [[nodiscard]] LogReal value() const { return scaled(cur_); }
  [[nodiscard]] LogReal previous() const { return scaled(prev_); }
  /// phi_j(x) as a plain double (underflows to 0 far outside the bulk).
  [[nodiscard]] double value_double() const;

 private:
  [[nodiscard]] LogReal scaled(double v) const;

  double x_;
  int j_ = 0;
  double prev_ = 0.0;
  double cur_ = 1.0;
  double log_scale_;
  double scale_factor_;  // exp(log_scale_)
};

/// phi_j(x) = (2^j j! sqrt(pi))^{-1/2} H_j(x) e^{-x^2/2}.
LogReal hermite_phi(int j, double x);

/// phi_0(x), ..., phi_{j_max}(x).
std::vector<LogReal> hermite_phi_all(int j_max, double x);

struct HermiteTriple {
  LogReal below;  // phi_{n-1}; zero when n = 0
  LogReal at;     // phi_n
  LogReal above;  // phi_{n+1}
};

HermiteTriple hermite_triple(int n, double x);

/// Integral of phi_n over the real line (zero for odd n).
double hermite_total_integral(int n);

/// sum_{i<N} phi_i(y)^2 by the Christoffel-Darboux two-term form
/// N phi_N(y)^2 - sqrt(N(N+1)) phi_{N-1}(y) phi_{N+1}(y).
LogReal christoffel_darboux_sum(int N, double y);

}  // namespace pspin::specfun
