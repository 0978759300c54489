#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pspin {

struct Interval {
  double lo;
  double hi;
};

/// Finite union of intervals of the extended real line, kept sorted and
/// merged. Endpoints may be +-infinity. Openness of endpoints is not
/// tracked: every set this library measures is hit at an endpoint with
/// probability zero.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);

  static IntervalSet real_line();
  static IntervalSet below(double u);  // (-inf, u)
  static IntervalSet above(double u);  // (u, +inf)

  /// Parses "R", "(-inf,-1.5)", "[0,1]U(2,inf)" (union with 'U' or '|').
  /// Throws DomainError on malformed input.
  static IntervalSet parse(std::string_view text);

  [[nodiscard]] bool contains(double x) const;
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] const std::vector<Interval>& parts() const { return parts_; }

  /// {c * x : x in this}, c > 0.
  [[nodiscard]] IntervalSet scaled(double c) const;
  /// {-x : x in this}.
  [[nodiscard]] IntervalSet negated() const;

  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Interval> parts_;
};

}  // namespace pspin
