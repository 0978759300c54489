#pragma once

namespace pspin::specfun {

/// Airy function of the first kind, Ai(x), and its derivative Ai'(x).
///
/// |x| <= 2 uses the Maclaurin series, [-10, -2) Taylor-steps the Airy
/// equation y'' = x y from -2, (2, 10] integrates a damped Laplace-type
/// representation, and |x| > 10 uses the asymptotic expansions.
double airy_ai(double x);
double airy_ai_prime(double x);

struct AiryPair {
  double ai;
  double ai_prime;
};

AiryPair airy(double x);

}  // namespace pspin::specfun
