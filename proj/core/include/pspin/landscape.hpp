#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "pspin/rng.hpp"

namespace pspin::landscape {

struct InstanceLimits {
  std::size_t max_coefficients = std::size_t{1} << 24;
};

/// Value, gradient and Hessian of a homogeneous polynomial on R^N.
struct AmbientJet {
  double value = 0.0;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
};

/// One draw of the p-spin Hamiltonian
///   H(sigma) = N^{-(p-1)/2} sum J_{i1..ip} sigma_i1 ... sigma_ip
/// on the sphere of radius sqrt(N), with i.i.d. standard Gaussian J stored
/// in full (N^p values, first index most significant). Most methods work
/// with the unit-sphere form f(x) = N^{-1/2} H(sqrt(N) x) = sum J x...x.
class LandscapeInstance {
 public:
  static LandscapeInstance sample(int p, int N, std::uint64_t seed, const InstanceLimits& limits = {});
  static LandscapeInstance from_coefficients(int p, int N, std::vector<double> coefficients,
                                             std::uint64_t seed = 0);

  [[nodiscard]] int p() const { return p_; }
  [[nodiscard]] int N() const { return N_; }
  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] const std::vector<double>& coefficients() const { return coefficients_; }
  /// Symmetrization of the coefficient tensor (same polynomial).
  [[nodiscard]] const std::vector<double>& symmetric_tensor() const { return symmetric_; }

  /// f(x) = sum J x_i1 ... x_ip for any x in R^N.
  [[nodiscard]] double f(const Eigen::VectorXd& x) const;
  /// H(sigma) on the radius-sqrt(N) sphere convention.
  [[nodiscard]] double hamiltonian(const Eigen::VectorXd& sigma) const;
  /// u = H(sqrt(N) x) / N = f(x) / sqrt(N) for a unit vector x.
  [[nodiscard]] double normalized_energy(const Eigen::VectorXd& x) const;

  [[nodiscard]] AmbientJet ambient_jet(const Eigen::VectorXd& x) const;

 private:
  LandscapeInstance(int p, int N, std::uint64_t seed, std::vector<double> coefficients);

  // Contracts the symmetric tensor with x in all but its first two slots.
  [[nodiscard]] Eigen::MatrixXd contract_to_matrix(const Eigen::VectorXd& x) const;

  int p_;
  int N_;
  std::uint64_t seed_;
  std::vector<double> coefficients_;
  std::vector<double> symmetric_;
};

/// Orthonormal basis (N x (N-1)) of the tangent space x^perp at a unit x.
Eigen::MatrixXd tangent_frame(const Eigen::VectorXd& x);

struct RiemannianDerivatives {
  double value = 0.0;
  Eigen::MatrixXd frame;             // N x (N-1)
  Eigen::VectorXd gradient;          // tangent coordinates, N-1
  Eigen::VectorXd ambient_gradient;  // projected gradient in R^N
  Eigen::MatrixXd hessian;           // (N-1) x (N-1)
};

/// Riemannian gradient and Hessian of f on the unit sphere at unit x:
/// F^T grad f and F^T (Hess f) F - <x, grad f> I in the frame F.
RiemannianDerivatives riemannian_grad_hess_unit(const LandscapeInstance& inst, const Eigen::VectorXd& x);
RiemannianDerivatives riemannian_grad_hess_unit(const LandscapeInstance& inst, const Eigen::VectorXd& x,
                                                const Eigen::MatrixXd& frame);

/// Same for H on the radius-sqrt(N) sphere at sigma (|sigma| = sqrt(N) to
/// 1e-12 relative). The Hessian is N^{-1/2} times the unit-sphere one.
RiemannianDerivatives riemannian_grad_hess(const LandscapeInstance& inst, const Eigen::VectorXd& sigma);

/// f, its Riemannian gradient and Hessian at the north pole e_0 in the frame
/// (e_1, ..., e_{N-1}).
struct PoleJet {
  double f = 0.0;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
};

PoleJet north_pole_jet(const LandscapeInstance& inst);

}  // namespace pspin::landscape
