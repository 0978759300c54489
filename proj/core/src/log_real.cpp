#include "pspin/log_real.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "pspin/error.hpp"

namespace pspin {

namespace {

constexpr double kLn2 = 0.693147180559945309417232121458176568;
constexpr std::int64_t kMaxExponent = std::int64_t{1} << 60;

}  // namespace

LogReal LogReal::make(int sign, double m, std::int64_t e) {
  if (sign == 0 || m == 0.0) return {};
  int shift = 0;
  LogReal r;
  r.sign_ = sign > 0 ? 1 : -1;
  r.mantissa_ = std::frexp(std::fabs(m), &shift);
  r.exponent_ = e + shift;
  if (r.exponent_ > kMaxExponent || r.exponent_ < -kMaxExponent) throw DomainError("LogReal: exponent out of range");
  return r;
}

LogReal LogReal::from_double(double value) {
  if (std::isnan(value)) throw DomainError("LogReal::from_double: NaN");
  if (std::isinf(value)) throw DomainError("LogReal::from_double: infinite value");
  return make(value > 0 ? 1 : (value < 0 ? -1 : 0), value, 0);
}

LogReal LogReal::from_log(double log_magnitude, int sign) {
  if (std::isnan(log_magnitude)) throw DomainError("LogReal::from_log: NaN");
  if (sign == 0 || log_magnitude == -std::numeric_limits<double>::infinity()) return {};
  if (!(std::fabs(log_magnitude) < 0.5 * kLn2 * static_cast<double>(kMaxExponent)))
    throw DomainError("LogReal::from_log: magnitude out of range");
  const double e = std::floor(log_magnitude / kLn2);
  return make(sign, std::exp(log_magnitude - e * kLn2), static_cast<std::int64_t>(e));
}

double LogReal::log_abs() const {
  if (sign_ == 0) return -std::numeric_limits<double>::infinity();
  return std::log(mantissa_) + static_cast<double>(exponent_) * kLn2;
}

double LogReal::to_double() const {
  if (sign_ == 0) return 0.0;
  if (exponent_ > 2000) return sign_ * std::numeric_limits<double>::infinity();
  if (exponent_ < -2000) return sign_ * 0.0;
  return sign_ * std::ldexp(mantissa_, static_cast<int>(exponent_));
}

LogReal LogReal::operator-() const {
  LogReal r = *this;
  r.sign_ = -sign_;
  return r;
}

LogReal LogReal::abs() const {
  LogReal r = *this;
  if (sign_ != 0) r.sign_ = 1;
  return r;
}

LogReal LogReal::pow(double exponent) const {
  if (sign_ < 0) throw DomainError("LogReal::pow of a negative value");
  if (sign_ == 0) {
    if (exponent <= 0) throw DomainError("LogReal::pow: 0 to a non-positive power");
    return {};
  }
  if (exponent == 0.5 && exponent_ % 2 == 0) return make(1, std::sqrt(mantissa_), exponent_ / 2);
  return from_log(exponent * log_abs());
}

LogReal operator*(const LogReal& a, const LogReal& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return {};
  return LogReal::make(a.sign_ * b.sign_, a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

LogReal operator/(const LogReal& a, const LogReal& b) {
  if (b.sign_ == 0) throw DomainError("LogReal: division by zero");
  if (a.sign_ == 0) return {};
  return LogReal::make(a.sign_ * b.sign_, a.mantissa_ / b.mantissa_, a.exponent_ - b.exponent_);
}

LogReal operator+(const LogReal& a, const LogReal& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  const bool a_big = a.exponent_ > b.exponent_ || (a.exponent_ == b.exponent_ && a.mantissa_ >= b.mantissa_);
  const LogReal& big = a_big ? a : b;
  const LogReal& small = a_big ? b : a;
  const std::int64_t gap = big.exponent_ - small.exponent_;
  if (gap > 60) return big;
  const double s = big.sign_ * big.mantissa_ + small.sign_ * std::ldexp(small.mantissa_, -static_cast<int>(gap));
  if (s == 0.0) return {};
  return LogReal::make(s > 0 ? 1 : -1, s, big.exponent_);
}

double relative_deviation(const LogReal& a, const LogReal& b) {
  if (b.is_zero()) throw DomainError("relative_deviation: zero reference");
  if (a.is_zero()) return 1.0;
  const LogReal ratio = a / b;
  if (ratio.sign() < 0) return 1.0 + ratio.abs().to_double();
  const double r = ratio.to_double();
  if (std::isfinite(r)) return std::fabs(r - 1.0);
  return r;
}

std::ostream& operator<<(std::ostream& os, const LogReal& x) {
  if (x.is_zero()) return os << "0";
  return os << (x.sign() < 0 ? "-" : "") << "exp(" << x.log_abs() << ")";
}

}  // namespace pspin
