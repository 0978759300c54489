#pragma once

#include <stdexcept>
#include <string>

namespace pspin {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure failed to reach its contract (non-convergence,
/// bracket failure, quadrature budget exhausted, ...). The message carries
/// the diagnostics that were available at the point of failure.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace detail
}  // namespace pspin
