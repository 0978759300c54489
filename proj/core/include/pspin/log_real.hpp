#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <limits>

namespace pspin {

/// Signed real with an unbounded exponent, stored as sign * m * 2^e with
/// m in [0.5, 1) and a 64-bit binary exponent e.
///
/// Used for every quantity that grows or decays exponentially in N: mean
/// counts like (p-1)^{N/2}, Hermite function values far outside the bulk,
/// and the prefactored sharp asymptotics. Zero has sign 0 and log_abs()
/// of -infinity. Finite doubles round-trip exactly.
class LogReal {
 public:
  constexpr LogReal() = default;

  static LogReal from_double(double value);
  /// exp(log_magnitude) with the given sign (+1 or -1).
  static LogReal from_log(double log_magnitude, int sign = 1);
  static constexpr LogReal zero() { return LogReal(); }

  [[nodiscard]] int sign() const { return sign_; }
  [[nodiscard]] double log_abs() const;
  [[nodiscard]] bool is_zero() const { return sign_ == 0; }
  /// Converts back; overflows to +-inf and underflows to 0 like std::exp.
  [[nodiscard]] double to_double() const;

  LogReal operator-() const;
  friend LogReal operator*(const LogReal& a, const LogReal& b);
  friend LogReal operator/(const LogReal& a, const LogReal& b);
  friend LogReal operator+(const LogReal& a, const LogReal& b);
  friend LogReal operator-(const LogReal& a, const LogReal& b) { return a + (-b); }
  LogReal& operator*=(const LogReal& o) { return *this = *this * o; }
  LogReal& operator/=(const LogReal& o) { return *this = *this / o; }
  LogReal& operator+=(const LogReal& o) { return *this = *this + o; }

  [[nodiscard]] LogReal abs() const;
  [[nodiscard]] LogReal pow(double exponent) const;  // requires sign >= 0
  [[nodiscard]] LogReal sqrt() const { return pow(0.5); }

  friend bool operator==(const LogReal& a, const LogReal& b) {
    return a.sign_ == b.sign_ && (a.sign_ == 0 || (a.mantissa_ == b.mantissa_ && a.exponent_ == b.exponent_));
  }

 private:
  // Normalizes an arbitrary positive finite magnitude m * 2^e.
  static LogReal make(int sign, double m, std::int64_t e);

  int sign_ = 0;
  double mantissa_ = 0.0;
  std::int64_t exponent_ = 0;
};

/// |a/b - 1| computed without leaving log space.
double relative_deviation(const LogReal& a, const LogReal& b);

std::ostream& operator<<(std::ostream& os, const LogReal& x);

}  // namespace pspin
