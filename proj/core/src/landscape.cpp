#include "pspin/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "pspin/error.hpp"

namespace pspin::landscape {

namespace {

std::size_t checked_power(int N, int p, std::size_t cap) {
  std::size_t n = 1;
  for (int i = 0; i < p; ++i) {
    if (n > cap / static_cast<std::size_t>(N)) {
      throw DomainError("LandscapeInstance: N^p exceeds the coefficient cap of " + std::to_string(cap));
    }
    n *= static_cast<std::size_t>(N);
  }
  return n;
}

std::vector<double> symmetrize(int p, int N, const std::vector<double>& J) {
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  const double w = 1.0 / static_cast<double>(perms.size());

  std::vector<double> S(J.size(), 0.0);
  std::vector<int> digits(p);
  for (std::size_t flat = 0; flat < J.size(); ++flat) {
    std::size_t r = flat;
    for (int k = p - 1; k >= 0; --k) {
      digits[k] = static_cast<int>(r % N);
      r /= N;
    }
    double acc = 0.0;
    for (const auto& pi : perms) {
      std::size_t idx = 0;
      for (int k = 0; k < p; ++k) idx = idx * N + digits[pi[k]];
      acc += J[idx];
    }
    S[flat] = w * acc;
  }
  return S;
}

}  // namespace

LandscapeInstance::LandscapeInstance(int p, int N, std::uint64_t seed, std::vector<double> coefficients)
    : p_(p), N_(N), seed_(seed), coefficients_(std::move(coefficients)) {
  symmetric_ = symmetrize(p_, N_, coefficients_);
}

LandscapeInstance LandscapeInstance::sample(int p, int N, std::uint64_t seed, const InstanceLimits& limits) {
  if (p < 2) throw DomainError("LandscapeInstance: p must be >= 2");
  if (N < 2) throw DomainError("LandscapeInstance: N must be >= 2");
  const std::size_t n = checked_power(N, p, limits.max_coefficients);
  Engine rng = make_engine(seed, 0);
  std::normal_distribution<double> gauss;
  std::vector<double> J(n);
  for (auto& v : J) v = gauss(rng);
  return LandscapeInstance(p, N, seed, std::move(J));
}

LandscapeInstance LandscapeInstance::from_coefficients(int p, int N, std::vector<double> coefficients,
                                                       std::uint64_t seed) {
  if (p < 2 || N < 2) throw DomainError("LandscapeInstance: need p >= 2 and N >= 2");
  const std::size_t n = checked_power(N, p, coefficients.size());
  if (coefficients.size() != n) throw DomainError("LandscapeInstance: coefficient count must be N^p");
  return LandscapeInstance(p, N, seed, std::move(coefficients));
}

Eigen::MatrixXd LandscapeInstance::contract_to_matrix(const Eigen::VectorXd& x) const {
  if (x.size() != N_) throw DomainError("LandscapeInstance: point has wrong dimension");
  std::vector<double> t = symmetric_;
  std::size_t size = t.size();
  for (int order = p_; order > 2; --order) {
    const std::size_t rows = size / N_;
    for (std::size_t r = 0; r < rows; ++r) {
      double acc = 0.0;
      for (int m = 0; m < N_; ++m) acc += t[r * N_ + m] * x[m];
      t[r] = acc;
    }
    size = rows;
  }
  Eigen::MatrixXd A(N_, N_);
  for (int a = 0; a < N_; ++a)
    for (int b = 0; b < N_; ++b) A(a, b) = t[static_cast<std::size_t>(a) * N_ + b];
  return A;
}

double LandscapeInstance::f(const Eigen::VectorXd& x) const {
  const Eigen::MatrixXd A = contract_to_matrix(x);
  return x.dot(A * x);
}

double LandscapeInstance::hamiltonian(const Eigen::VectorXd& sigma) const {
  const double n = N_;
  return std::pow(n, -0.5 * (p_ - 1)) * f(sigma);
}

double LandscapeInstance::normalized_energy(const Eigen::VectorXd& x) const {
  return f(x) / std::sqrt(static_cast<double>(N_));
}

AmbientJet LandscapeInstance::ambient_jet(const Eigen::VectorXd& x) const {
  const Eigen::MatrixXd A = contract_to_matrix(x);
  AmbientJet j;
  const Eigen::VectorXd Ax = A * x;
  j.value = x.dot(Ax);
  j.gradient = p_ * Ax;
  j.hessian = static_cast<double>(p_) * (p_ - 1) * A;
  return j;
}

Eigen::MatrixXd tangent_frame(const Eigen::VectorXd& x) {
  const auto N = x.size();
  if (N < 2) throw DomainError("tangent_frame: dimension must be >= 2");
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(x);
  const Eigen::MatrixXd Q = qr.householderQ();
  return Q.rightCols(N - 1);
}

RiemannianDerivatives riemannian_grad_hess_unit(const LandscapeInstance& inst, const Eigen::VectorXd& x,
                                                const Eigen::MatrixXd& frame) {
  if (std::abs(x.norm() - 1.0) > 1e-12) throw DomainError("riemannian_grad_hess: x is not a unit vector");
  const int N = inst.N();
  if (frame.rows() != N || frame.cols() != N - 1) throw DomainError("riemannian_grad_hess: bad frame shape");
  const AmbientJet j = inst.ambient_jet(x);
  RiemannianDerivatives d;
  d.value = j.value;
  d.frame = frame;
  d.gradient = frame.transpose() * j.gradient;
  d.ambient_gradient = j.gradient - x.dot(j.gradient) * x;
  d.hessian = frame.transpose() * j.hessian * frame;
  d.hessian.diagonal().array() -= x.dot(j.gradient);
  d.hessian = 0.5 * (d.hessian + d.hessian.transpose()).eval();
  return d;
}

RiemannianDerivatives riemannian_grad_hess_unit(const LandscapeInstance& inst, const Eigen::VectorXd& x) {
  return riemannian_grad_hess_unit(inst, x, tangent_frame(x));
}

RiemannianDerivatives riemannian_grad_hess(const LandscapeInstance& inst, const Eigen::VectorXd& sigma) {
  const double r = std::sqrt(static_cast<double>(inst.N()));
  if (std::abs(sigma.norm() - r) > 1e-12 * r) {
    throw DomainError("riemannian_grad_hess: sigma is not on the sphere of radius sqrt(N)");
  }
  RiemannianDerivatives d = riemannian_grad_hess_unit(inst, sigma / r);
  d.value = inst.hamiltonian(sigma);
  d.hessian /= r;
  return d;
}

PoleJet north_pole_jet(const LandscapeInstance& inst) {
  const int N = inst.N();
  Eigen::VectorXd e0 = Eigen::VectorXd::Zero(N);
  e0[0] = 1.0;
  const Eigen::MatrixXd frame = Eigen::MatrixXd::Identity(N, N).rightCols(N - 1);
  const auto d = riemannian_grad_hess_unit(inst, e0, frame);
  return {d.value, d.gradient, d.hessian};
}

}  // namespace pspin::landscape
