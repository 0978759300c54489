#include "pspin/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include <nlohmann/json.hpp>

#include "pspin/error.hpp"
#include "pspin/rng.hpp"

namespace pspin::landscape {

namespace {

double tangent_residual(const LandscapeInstance& inst, const Eigen::VectorXd& x) {
  const Eigen::VectorXd g = inst.ambient_jet(x).gradient;
  return (g - x.dot(g) * x).norm();
}

Eigen::VectorXd fibonacci_point(int i, int n) {
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - (2.0 * i + 1.0) / n;
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  Eigen::VectorXd x(3);
  x << r * std::cos(golden * i), r * std::sin(golden * i), z;
  return x;
}

class Enumerator {
 public:
  Enumerator(const LandscapeInstance& inst, const EnumerationOptions& opt)
      : inst_(inst), opt_(opt), rng_(make_engine(inst.seed(), 1)) {
    report_.seed = inst.seed();
    report_.p = inst.p();
    report_.N = inst.N();
  }

  EnumerationReport run() {
    int saturation = opt_.saturation;
    for (int attempt = 0;; ++attempt) {
      int since_new = 0;
      while (since_new < saturation && report_.starts_used < opt_.max_starts) {
        const Eigen::VectorXd x0 = next_start();
        ++report_.starts_used;
        ++since_new;
        if (try_start(x0)) {
          since_new = 0;
          report_.last_new_start = report_.starts_used;
        }
      }
      finalize();
      if (report_.morse_ok || attempt >= opt_.retries || report_.starts_used >= opt_.max_starts) break;
      saturation *= 2;
    }
    return std::move(report_);
  }

 private:
  Eigen::VectorXd next_start() {
    const int N = inst_.N();
    if (N == 3 && report_.starts_used < opt_.lattice_starts) {
      return fibonacci_point(report_.starts_used, opt_.lattice_starts);
    }
    Eigen::VectorXd x(N);
    for (int i = 0; i < N; ++i) x[i] = gauss_(rng_);
    return x.normalized();
  }

  bool try_start(const Eigen::VectorXd& x0) {
    const auto r = newton_critical_point(inst_, x0, opt_);
    if (!r.converged) return false;
    if (!add(r.x, r.residual)) return false;
    const auto anti = newton_critical_point(inst_, -r.x, opt_);
    if (anti.converged) add(anti.x, anti.residual);
    return true;
  }

  bool known(const Eigen::VectorXd& x) const {
    for (const auto& c : report_.points)
      if ((c.position - x).norm() < opt_.dedup_radius) return true;
    for (const auto& y : degenerate_)
      if ((y - x).norm() < opt_.dedup_radius) return true;
    return false;
  }

  bool add(const Eigen::VectorXd& x, double residual) {
    if (known(x)) return false;
    const auto d = riemannian_grad_hess_unit(inst_, x);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d.hessian, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = es.eigenvalues();
    if (ev.cwiseAbs().minCoeff() < opt_.degeneracy) {
      degenerate_.push_back(x);
      ++report_.rejected;
      return true;
    }
    CriticalPoint c;
    c.position = x;
    c.normalized_energy = d.value / std::sqrt(static_cast<double>(inst_.N()));
    c.index = static_cast<int>((ev.array() < 0.0).count());
    c.hessian_spectrum.assign(ev.data(), ev.data() + ev.size());
    c.residual = residual;
    report_.points.push_back(std::move(c));
    return true;
  }

  void finalize() {
    report_.counts.clear();
    for (int k = 0; k < inst_.N(); ++k) report_.counts[k] = 0;
    int alternating = 0;
    for (const auto& c : report_.points) {
      ++report_.counts[c.index];
      alternating += (c.index % 2 == 0) ? 1 : -1;
    }
    report_.morse_ok = alternating == morse_target(inst_.N());
  }

  const LandscapeInstance& inst_;
  const EnumerationOptions& opt_;
  Engine rng_;
  std::normal_distribution<double> gauss_;
  EnumerationReport report_;
  std::vector<Eigen::VectorXd> degenerate_;
};

}  // namespace

int EnumerationReport::count(int k, const IntervalSet& B) const {
  int n = 0;
  for (const auto& c : points)
    if (c.index == k && B.contains(c.normalized_energy)) ++n;
  return n;
}

int morse_target(int N) { return (N - 1) % 2 == 0 ? 2 : 0; }

NewtonResult newton_critical_point(const LandscapeInstance& inst, const Eigen::VectorXd& x0,
                                   const EnumerationOptions& opt) {
  NewtonResult res;
  Eigen::VectorXd x = x0.normalized();
  double r = tangent_residual(inst, x);
  for (int it = 0; it < opt.max_newton_iterations && r > 1e-13; ++it) {
    res.iterations = it + 1;
    const auto d = riemannian_grad_hess_unit(inst, x);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d.hessian);
    Eigen::VectorXd lam = es.eigenvalues();
    for (auto& l : lam) {
      if (std::abs(l) < 1e-12) l = l < 0.0 ? -1e-12 : 1e-12;
    }
    const Eigen::MatrixXd& V = es.eigenvectors();
    const Eigen::VectorXd step = -V * (V.transpose() * d.gradient).cwiseQuotient(lam);
    Eigen::VectorXd a = d.frame * step;
    if (a.norm() > 0.5) a *= 0.5 / a.norm();

    double t = 1.0;
    bool moved = false;
    while (t > 1e-6) {
      const Eigen::VectorXd xn = (x + t * a).normalized();
      const double rn = tangent_residual(inst, xn);
      if (rn * rn <= (1.0 - 1e-4 * t) * r * r) {
        x = xn;
        r = rn;
        moved = true;
        break;
      }
      t *= 0.5;
    }
    if (!moved) break;
  }
  res.x = x;
  res.residual = r;
  res.converged = r < opt.residual_tol;
  return res;
}

EnumerationReport enumerate_critical_points(const LandscapeInstance& inst, const EnumerationOptions& opt,
                                            bool force) {
  if (!force && (inst.N() > 6 || inst.p() > 4)) {
    throw DomainError("enumerate_critical_points: supported for N <= 6 and p <= 4");
  }
  return Enumerator(inst, opt).run();
}

std::string to_json(const EnumerationReport& report, int indent) {
  nlohmann::ordered_json j;
  j["seed"] = report.seed;
  j["p"] = report.p;
  j["N"] = report.N;
  auto& pts = j["points"] = nlohmann::ordered_json::array();
  for (const auto& c : report.points) {
    nlohmann::ordered_json q;
    q["position"] = std::vector<double>(c.position.data(), c.position.data() + c.position.size());
    q["normalized_energy"] = c.normalized_energy;
    q["index"] = c.index;
    q["hessian_spectrum"] = c.hessian_spectrum;
    q["residual"] = c.residual;
    pts.push_back(std::move(q));
  }
  auto& counts = j["counts"] = nlohmann::ordered_json::object();
  for (const auto& [k, n] : report.counts) counts[std::to_string(k)] = n;
  j["morse_ok"] = report.morse_ok;
  j["rejected"] = report.rejected;
  j["starts_used"] = report.starts_used;
  j["last_new_start"] = report.last_new_start;
  return j.dump(indent);
}

double ground_state_of_instance(const EnumerationReport& report) {
  if (!report.accepted()) throw NumericalError("ground_state_of_instance: enumeration is incomplete");
  if (report.points.empty()) throw NumericalError("ground_state_of_instance: no critical points");
  double m = std::numeric_limits<double>::infinity();
  for (const auto& c : report.points) m = std::min(m, c.normalized_energy);
  return m;
}

double ground_state_of_instance(const LandscapeInstance& inst, const EnumerationOptions& opt) {
  return ground_state_of_instance(enumerate_critical_points(inst, opt));
}

CrtTable empirical_crt_table(int p, int N, const std::vector<IntervalSet>& sets, std::int64_t n_instances,
                             std::uint64_t seed, const CrtOptions& opt) {
  if (n_instances < 1) throw DomainError("empirical_crt_table: n_instances must be >= 1");
  if (sets.empty()) throw DomainError("empirical_crt_table: no sets given");
  const auto n_sets = sets.size();
  struct Tally {
    bool accepted = false;
    std::vector<std::vector<int>> counts;  // [set][k]
  };
  const int threads = opt.threads > 0 ? opt.threads : default_thread_count();
  const auto tallies = run_blocks(static_cast<std::size_t>(n_instances), threads, [&](std::size_t i) {
    const auto inst = LandscapeInstance::sample(p, N, stream_seed(seed, i));
    const auto rep = enumerate_critical_points(inst, opt.enumeration);
    Tally t;
    t.accepted = rep.accepted();
    t.counts.assign(n_sets, std::vector<int>(N, 0));
    for (const auto& c : rep.points)
      for (std::size_t s = 0; s < n_sets; ++s)
        if (sets[s].contains(c.normalized_energy)) ++t.counts[s][c.index];
    return t;
  });

  CrtTable table;
  table.p = p;
  table.N = N;
  table.sets = sets;
  table.n_instances = n_instances;
  std::vector<std::vector<double>> sum(n_sets, std::vector<double>(N + 1, 0.0));
  auto sum_sq = sum;
  for (const auto& t : tallies) {
    if (!t.accepted) {
      ++table.rejected;
      continue;
    }
    ++table.accepted;
    for (std::size_t s = 0; s < n_sets; ++s) {
      double total = 0.0;
      for (int k = 0; k < N; ++k) {
        sum[s][k] += t.counts[s][k];
        sum_sq[s][k] += static_cast<double>(t.counts[s][k]) * t.counts[s][k];
        total += t.counts[s][k];
      }
      sum[s][N] += total;
      sum_sq[s][N] += total * total;
    }
  }
  if (table.rejection_rate() > opt.max_rejection_rate) {
    throw NumericalError("empirical_crt_table: " + std::to_string(table.rejected) + " of " +
                         std::to_string(n_instances) + " instances failed the Morse certificate");
  }
  const double n = static_cast<double>(table.accepted);
  auto stats = [n](double s, double sq) {
    CrtStatistics c;
    c.mean = s / n;
    const double var = n > 1 ? std::max(0.0, (sq - n * c.mean * c.mean) / (n - 1.0)) : 0.0;
    c.std_error = std::sqrt(var / n);
    return c;
  };
  table.per_index.assign(n_sets, {});
  for (std::size_t s = 0; s < n_sets; ++s) {
    for (int k = 0; k < N; ++k) table.per_index[s].push_back(stats(sum[s][k], sum_sq[s][k]));
    table.summed.push_back(stats(sum[s][N], sum_sq[s][N]));
  }
  return table;
}

CrtStatistics empirical_crt_statistics(int p, int N, int k, const IntervalSet& B, std::int64_t n_instances,
                                       std::uint64_t seed, const CrtOptions& opt) {
  if (k < 0 || k >= N) throw DomainError("empirical_crt_statistics: k must lie in [0, N-1]");
  return empirical_crt_table(p, N, {B}, n_instances, seed, opt).per_index[0][k];
}

}  // namespace pspin::landscape
