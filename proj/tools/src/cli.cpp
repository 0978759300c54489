#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include "CLI11.hpp"
#include "pspin/complexity.hpp"
#include "pspin/enumerate.hpp"
#include "pspin/error.hpp"
#include "pspin/goe.hpp"
#include "pspin/interval.hpp"
#include "pspin/rng.hpp"
#include "pspin/sharp.hpp"
#include "pspin/specfun.hpp"
#include "pspin/tap.hpp"
#include "report.hpp"
#include "version.hpp"

namespace pspin::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format;  // empty: json for verify-identity, csv otherwise
  std::uint64_t seed = 0;
  bool seed_given = false;
  int threads = 0;
  std::string output;
};

struct Outcome {
  Report report;
  int code = kSuccess;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw UsageError(what + ": '" + s + "' is not an integer");
  return v;
}

/// Comma-separated integers; an item "a..b" expands to a, a+1, ..., b.
std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const auto& s : split_list(text)) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(s, what));
      continue;
    }
    const int lo = parse_int(trim(s.substr(0, dots)), what);
    const int hi = parse_int(trim(s.substr(dots + 2)), what);
    if (hi < lo || hi - lo > 100000) throw UsageError(what + ": bad range '" + s + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const auto& s : split_list(text)) {
    double v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v))
      throw UsageError(what + ": '" + s + "' is not a finite number");
    out.push_back(v);
  }
  return out;
}

std::int64_t as_count(double v, const std::string& what) {
  if (!(v >= 1.0 && v <= 9.0e15 && std::floor(v) == v))
    throw UsageError(what + " must be a positive integer (got " + format_double(v) + ")");
  return static_cast<std::int64_t>(v);
}

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 1) throw UsageError("--points must be >= 1");
  if (!(lo <= hi)) throw UsageError("grid lower end exceeds upper end");
  std::vector<double> out(points);
  for (int i = 0; i < points; ++i) out[i] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
  if (points > 1) out.back() = hi;
  return out;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format (default csv; json for verify-identity)")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--seed", c.seed, "Master seed (generated and printed when absent)");
  sub->add_option("--threads", c.threads, "Worker threads (0: $PSPIN_THREADS or hardware)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sub->add_option("--output,-o", c.output, "Write the report to this file instead of stdout");
}

void record_common(Report& r, const Common& c) { r.set("seed", c.seed); }

// ---------------------------------------------------------------- curves

struct CurvesArgs {
  int p = 3;
  std::string k = "0,1,2,10,100";
  double u_min = -2.5;
  double u_max = 1.0;
  int points = 351;
};

Outcome cmd_curves(const CurvesArgs& a, const Common& c) {
  const auto ks = parse_int_list(a.k, "--k");
  for (int k : ks)
    if (k < 0) throw UsageError("--k entries must be >= 0");
  const auto grid = linspace(a.u_min, a.u_max, a.points);
  Outcome o;
  o.report.command = "curves";
  record_common(o.report, c);
  o.report.set("p", static_cast<std::int64_t>(a.p));
  o.report.set("k", a.k);
  o.report.set("e_infinity", complexity::e_infinity(a.p));
  std::vector<std::string> cols = {"u", "theta_total"};
  for (int k : ks) cols.push_back("theta_k" + std::to_string(k));
  auto& t = o.report.add_table("curves", cols);
  const double edge = -complexity::e_infinity(a.p);
  double spread = 0.0;
  for (double u : grid) {
    std::vector<Cell> row = {u, complexity::theta_total(a.p, u)};
    double lo = INFINITY, hi = -INFINITY;
    for (int k : ks) {
      const double v = complexity::theta_index(a.p, k, u);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      row.emplace_back(v);
    }
    if (u >= edge && !ks.empty()) spread = std::max(spread, hi - lo);
    t.add_row(std::move(row));
  }
  o.report.set("max_index_spread_above_edge", spread);
  o.report.set("curves_coincide_above_edge", spread < 1e-12);
  if (!(spread < 1e-12)) o.code = kCheckFailed;
  return o;
}

// ------------------------------------------------------------ thresholds

struct ThresholdArgs {
  std::string p = "3..10";
  int k_max = 5;
};

Outcome cmd_thresholds(const ThresholdArgs& a, const Common& c) {
  const auto ps = parse_int_list(a.p, "--p");
  if (ps.empty()) throw UsageError("--p: at least one degree required");
  for (int p : ps)
    if (p < 3) throw UsageError("thresholds: p = " + std::to_string(p) + " rejected, E_k(p) requires p >= 3");
  if (a.k_max < 0) throw UsageError("--k-max must be >= 0");
  Outcome o;
  o.report.command = "thresholds";
  record_common(o.report, c);
  o.report.set("p", a.p);
  o.report.set("k_max", static_cast<std::int64_t>(a.k_max));
  o.report.set("agreement_tolerance", 1e-6);
  std::vector<std::string> cols = {"p", "e_infinity"};
  for (int k = 0; k <= a.k_max; ++k) cols.push_back("e_" + std::to_string(k));
  for (const char* s : {"gs_variational", "gs_scalar", "max_disagreement", "agree", "e_k_decreasing"}) cols.push_back(s);
  auto& t = o.report.add_table("thresholds", cols);
  for (int p : ps) {
    const auto table = complexity::threshold_table(p, a.k_max);
    std::vector<Cell> row = {static_cast<std::int64_t>(p), table.e_infinity};
    bool decreasing = true;
    for (std::size_t i = 0; i < table.e_k.size(); ++i) {
      row.emplace_back(table.e_k[i].second);
      if (i > 0 && !(table.e_k[i].second < table.e_k[i - 1].second)) decreasing = false;
    }
    const double e0 = table.e_k.front().second;
    const double gv = complexity::ground_state_variational(p).gamma;
    const double gs = complexity::ground_state_scalar(p).gamma;
    const double dis = std::max(std::abs(e0 - gv), std::abs(e0 - gs));
    const bool agree = dis <= 1e-6;
    row.emplace_back(gv);
    row.emplace_back(gs);
    row.emplace_back(dis);
    row.emplace_back(agree);
    row.emplace_back(decreasing);
    if (!agree || !decreasing) o.code = kCheckFailed;
    t.add_row(std::move(row));
  }
  return o;
}

// ------------------------------------------------------- verify-identity

struct IdentityArgs {
  int p = 3;
  int N = 3;
  int k = -1;
  std::string B = "R";
  double samples = 1e6;
  double instances = 2000;
};

double z_score(double a, double b, double se_a, double se_b) {
  const double se = std::hypot(se_a, se_b);
  const double diff = a - b;
  if (se > 0.0) return diff / se;
  if (std::abs(diff) <= 1e-9 * std::max(1.0, std::abs(b))) return 0.0;
  return diff > 0 ? INFINITY : -INFINITY;
}

Outcome cmd_verify_identity(const IdentityArgs& a, const Common& c) {
  IntervalSet B;
  try {
    B = IntervalSet::parse(a.B);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--B: ") + e.what());
  }
  if (a.p < 2) throw UsageError("--p must be >= 2");
  if (a.N < 2) throw UsageError("--N must be >= 2");
  if (a.k < -1 || a.k >= a.N) throw UsageError("--k must lie in [0, N-1]");
  const auto samples = as_count(a.samples, "--samples");
  const auto instances = as_count(a.instances, "--instances");

  landscape::CrtOptions crt;
  crt.threads = c.threads;
  goe::McOptions mc;
  mc.threads = c.threads;
  const auto lhs = landscape::empirical_crt_table(a.p, a.N, {B}, instances, stream_seed(c.seed, 0), crt);
  const auto rhs = goe::mc_identity_rhs_all(a.p, a.N, B, samples, stream_seed(c.seed, 1), mc);
  const double exact = specfun::exact_mean_total(a.p, a.N, B).to_double();

  Outcome o;
  auto& r = o.report;
  r.command = "verify-identity";
  record_common(r, c);
  r.set("p", static_cast<std::int64_t>(a.p));
  r.set("N", static_cast<std::int64_t>(a.N));
  r.set("B", B.to_string());
  r.set("k", a.k < 0 ? Cell(std::string("all")) : Cell(static_cast<std::int64_t>(a.k)));
  r.set("n_samples", samples);
  r.set("n_instances", instances);
  r.set("accepted_instances", lhs.accepted);
  r.set("morse_failures", lhs.rejected);
  r.set("rejection_rate", lhs.rejection_rate());
  r.set("z_threshold", 3.0);
  auto& t = r.add_table("identity", {"k", "lhs_mean", "lhs_se", "rhs_mean", "rhs_se", "z", "exact", "z_exact"});
  bool pass = true;
  auto emit = [&](Cell k, const landscape::CrtStatistics& l, const goe::McEstimate& m, bool summed) {
    const double rm = m.estimate.to_double();
    const double rs = m.std_error.to_double();
    const double z = z_score(l.mean, rm, l.std_error, rs);
    pass = pass && std::abs(z) < 3.0;
    Cell ex, zx;
    if (summed) {
      ex = exact;
      zx = z_score(l.mean, exact, l.std_error, 0.0);
    }
    t.add_row({std::move(k), l.mean, l.std_error, rm, rs, z, ex, zx});
  };
  if (a.k >= 0) {
    emit(static_cast<std::int64_t>(a.k), lhs.per_index[0][a.k], rhs.per_index[a.k], false);
  } else {
    for (int k = 0; k < a.N; ++k) emit(static_cast<std::int64_t>(k), lhs.per_index[0][k], rhs.per_index[k], false);
    emit(std::string("sum"), lhs.summed[0], rhs.summed, true);
  }
  r.set("pass", pass);
  o.code = pass ? kSuccess : kCheckFailed;
  return o;
}

// ------------------------------------------------------------------- tap

struct TapArgs {
  int p = 3;
  double beta = 2.0;
  int k = 0;
  double u_min = -2.2;
  double u_max = NAN;
  int points = 101;
};

Outcome cmd_tap(const TapArgs& a, const Common& c) {
  if (a.p < 3) throw UsageError("tap: p must be >= 3");
  if (!(a.beta > 0.0)) throw UsageError("tap: beta must be > 0");
  if (a.k < 0) throw UsageError("tap: k must be >= 0");
  const double edge = -complexity::e_infinity(a.p);
  const double hi = std::isnan(a.u_max) ? edge : a.u_max;
  if (hi > edge + 1e-15) throw UsageError("tap: --u-max must be <= -E_inf(p) = " + format_double(edge));
  const auto grid = linspace(a.u_min, std::min(hi, edge), a.points);
  Outcome o;
  auto& r = o.report;
  r.command = "tap";
  record_common(r, c);
  r.set("p", static_cast<std::int64_t>(a.p));
  r.set("beta", a.beta);
  r.set("k", static_cast<std::int64_t>(a.k));
  r.set("u_star", tap::u_star(a.p, a.beta));
  r.set("beta_at_edge", tap::beta_of_u(a.p, edge));
  auto& t = r.add_table("complexity", {"u", "level", "complexity", "vanishing"});
  auto& s = r.add_table("stationary", {"h", "z", "q_low", "q_high", "curvature_sign_low", "curvature_sign_high"});
  for (double u : grid) {
    const auto tc = tap::tap_complexity(a.p, a.k, u, a.beta);
    t.add_row({u, tc.level, tc.value, tc.vanishing});
    const auto roots = tap::solve_q(a.p, a.beta, u);
    Cell ql, qh, sl, sh;
    if (!roots.q.empty()) {
      ql = roots.q.front();
      sl = static_cast<std::int64_t>(tap::q_curvature_sign(a.p, a.beta, u, roots.q.front()));
    }
    if (roots.q.size() > 1) {
      qh = roots.q.back();
      sh = static_cast<std::int64_t>(tap::q_curvature_sign(a.p, a.beta, u, roots.q.back()));
    }
    s.add_row({u, roots.q.empty() ? Cell() : Cell(roots.z), ql, qh, sl, sh});
  }
  return o;
}

// ----------------------------------------------------------------- sharp

struct SharpArgs {
  int p = 3;
  double u = 0.5;
  std::string N = "50,100,200";
};

Outcome cmd_sharp(const SharpArgs& a, const Common& c) {
  if (a.p < 3) throw UsageError("sharp: p must be >= 3");
  const auto Ns = parse_int_list(a.N, "--N");
  if (Ns.empty()) throw UsageError("--N: at least one dimension required");
  for (int n : Ns)
    if (n < 1 || n > 400) throw UsageError("--N entries must lie in [1, 400]");
  const auto rows = sharp::compare_exact_sharp(a.p, a.u, Ns, c.threads);
  Outcome o;
  auto& r = o.report;
  r.command = "sharp";
  record_common(r, c);
  r.set("p", static_cast<std::int64_t>(a.p));
  r.set("u", a.u);
  r.set("regime", std::string(sharp::to_string(sharp::regime(a.p, a.u))));
  auto& t = r.add_table("comparison", {"p", "u", "N", "exact_log", "sharp_log", "rel_dev"});
  bool decreasing = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    t.add_row({static_cast<std::int64_t>(row.p), row.u, static_cast<std::int64_t>(row.N), row.exact_log,
               row.sharp_log, row.rel_dev});
    if (i > 0 && !(row.rel_dev < rows[i - 1].rel_dev)) decreasing = false;
  }
  r.set("rel_dev_decreasing", decreasing);
  return o;
}

// --------------------------------------------------------------- goe-ldp

struct LdpArgs {
  std::string N = "20,40";
  std::string k = "1,2";
  std::string x = "1.5,1.6,1.7,1.8";
  double samples = 2e5;
};

Outcome cmd_goe_ldp(const LdpArgs& a, const Common& c) {
  const auto Ns = parse_int_list(a.N, "--N");
  const auto ks = parse_int_list(a.k, "--k");
  const auto xs = parse_double_list(a.x, "--x");
  if (Ns.empty() || ks.empty() || xs.empty()) throw UsageError("goe-ldp: --N, --k and --x must be non-empty");
  const auto samples = as_count(a.samples, "--samples");
  const double sigma = goe::kStandardSigma;
  for (double x : xs)
    if (!(x > 2.0 * sigma)) throw UsageError("--x entries must exceed the spectral edge sqrt(2)");
  for (int n : Ns)
    for (int k : ks)
      if (k < 1 || k > n) throw UsageError("--k entries must lie in [1, N]");
  Outcome o;
  auto& r = o.report;
  r.command = "goe-ldp";
  record_common(r, c);
  r.set("N", a.N);
  r.set("k", a.k);
  r.set("x", a.x);
  r.set("sigma", sigma);
  r.set("n_samples", samples);
  auto& t = r.add_table("rates", {"N", "k", "x", "rate", "rate_mc", "is_bound", "hits", "probability"});
  goe::McOptions mc;
  mc.threads = c.threads;
  std::uint64_t stream = 0;
  for (int n : Ns) {
    for (int k : ks) {
      for (double x : xs) {
        const auto est = goe::tail_estimate(n, k, x, samples, stream_seed(c.seed, stream++), mc);
        t.add_row({static_cast<std::int64_t>(n), static_cast<std::int64_t>(k), x, goe::ldp_rate(k, x, sigma), est.rate,
                   est.is_bound, est.hits, est.probability});
      }
    }
  }
  return o;
}

// ------------------------------------------------------------- enumerate

struct EnumerateArgs {
  int p = 3;
  int N = 3;
  int saturation = 200;
};

Outcome cmd_enumerate(const EnumerateArgs& a, const Common& c) {
  if (a.p < 2 || a.p > 4 || a.N < 2 || a.N > 6) throw UsageError("enumerate: requires 2 <= p <= 4 and 2 <= N <= 6");
  if (a.saturation < 1) throw UsageError("--saturation must be >= 1");
  const auto inst = landscape::LandscapeInstance::sample(a.p, a.N, c.seed);
  landscape::EnumerationOptions opt;
  opt.saturation = a.saturation;
  const auto rep = landscape::enumerate_critical_points(inst, opt);
  Outcome o;
  auto& r = o.report;
  r.command = "enumerate";
  record_common(r, c);
  r.set("p", static_cast<std::int64_t>(a.p));
  r.set("N", static_cast<std::int64_t>(a.N));
  r.set("morse_ok", rep.morse_ok);
  r.set("rejected", static_cast<std::int64_t>(rep.rejected));
  r.set("starts_used", static_cast<std::int64_t>(rep.starts_used));
  r.set("last_new_start", static_cast<std::int64_t>(rep.last_new_start));
  r.set("accepted", rep.accepted());
  std::vector<std::string> cols = {"index", "normalized_energy", "residual"};
  for (int i = 0; i < a.N; ++i) cols.push_back("x" + std::to_string(i));
  for (int i = 0; i + 1 < a.N; ++i) cols.push_back("hess" + std::to_string(i));
  auto& t = r.add_table("points", cols);
  for (const auto& cp : rep.points) {
    std::vector<Cell> row = {static_cast<std::int64_t>(cp.index), cp.normalized_energy, cp.residual};
    for (int i = 0; i < a.N; ++i) row.emplace_back(cp.position[i]);
    for (double h : cp.hessian_spectrum) row.emplace_back(h);
    t.add_row(std::move(row));
  }
  auto& counts = r.add_table("counts", {"index", "count"});
  for (const auto& [k, n] : rep.counts) counts.add_row({static_cast<std::int64_t>(k), static_cast<std::int64_t>(n)});
  if (!rep.accepted()) o.code = kCheckFailed;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complexity of spherical p-spin spin glasses: curves, thresholds and validation runs"};
  app.name("pspin");
  app.set_version_flag("--version", std::string("pspin ") + kVersion);
  app.require_subcommand(1);

  Common common;
  CurvesArgs curves;
  ThresholdArgs thresholds;
  IdentityArgs identity;
  TapArgs tap_args;
  SharpArgs sharp_args;
  LdpArgs ldp;
  EnumerateArgs enumerate;

  auto* s_curves = app.add_subcommand("curves", "Theta_p(u) and Theta_{k,p}(u) on a u-grid");
  s_curves->add_option("--p", curves.p, "Spin degree")->check(CLI::Range(2, 1000))->capture_default_str();
  s_curves->add_option("--k", curves.k, "Comma-separated indices (empty: total only)")->capture_default_str();
  s_curves->add_option("--u-min", curves.u_min, "Grid start")->capture_default_str();
  s_curves->add_option("--u-max", curves.u_max, "Grid end")->capture_default_str();
  s_curves->add_option("--points", curves.points, "Grid points")->capture_default_str();

  auto* s_thr = app.add_subcommand("thresholds", "E_inf, E_k and the ground-state cross-check");
  s_thr->add_option("--p", thresholds.p, "Degrees (>= 3), comma-separated, ranges as a..b")->capture_default_str();
  s_thr->add_option("--k-max", thresholds.k_max, "Largest index k for E_k")->capture_default_str();

  auto* s_id = app.add_subcommand("verify-identity", "Critical-point counts against the GOE expectation");
  s_id->add_option("--p", identity.p, "Spin degree")->capture_default_str();
  s_id->add_option("--N", identity.N, "Dimension (enumeration needs N <= 6)")->capture_default_str();
  s_id->add_option("--k", identity.k, "Single index (default: all indices and their sum)");
  s_id->add_option("--B", identity.B, "Energy set, e.g. R or (-inf,-1.63)")->capture_default_str();
  s_id->add_option("--samples", identity.samples, "GOE draws")->capture_default_str();
  s_id->add_option("--instances", identity.instances, "Landscape instances")->capture_default_str();

  auto* s_tap = app.add_subcommand("tap", "TAP complexity and stationary points along a u-grid");
  s_tap->add_option("--p", tap_args.p, "Spin degree (>= 3)")->capture_default_str();
  s_tap->add_option("--beta", tap_args.beta, "Inverse temperature")->capture_default_str();
  s_tap->add_option("--k", tap_args.k, "Index")->capture_default_str();
  s_tap->add_option("--u-min", tap_args.u_min, "Grid start")->capture_default_str();
  s_tap->add_option("--u-max", tap_args.u_max, "Default -E_inf(p)");
  s_tap->add_option("--points", tap_args.points, "Grid points")->capture_default_str();

  auto* s_sharp = app.add_subcommand("sharp", "Sharp asymptotics against the exact quadrature");
  s_sharp->add_option("--p", sharp_args.p, "Spin degree (>= 3)")->capture_default_str();
  s_sharp->add_option("--u", sharp_args.u, "Energy level")->capture_default_str();
  s_sharp->add_option("--N", sharp_args.N, "Comma-separated dimensions (<= 400)")->capture_default_str();

  auto* s_ldp = app.add_subcommand("goe-ldp", "Large-deviation rates of the top GOE eigenvalues");
  s_ldp->add_option("--N", ldp.N, "Comma-separated matrix sizes")->capture_default_str();
  s_ldp->add_option("--k", ldp.k, "Comma-separated eigenvalue ranks from the top (>= 1)")->capture_default_str();
  s_ldp->add_option("--x", ldp.x, "Comma-separated levels (> sqrt 2)")->capture_default_str();
  s_ldp->add_option("--samples", ldp.samples, "GOE draws per (N, k, x)")->capture_default_str();

  auto* s_enum = app.add_subcommand("enumerate", "Critical points of one sampled instance");
  s_enum->add_option("--p", enumerate.p, "Spin degree (<= 4)")->capture_default_str();
  s_enum->add_option("--N", enumerate.N, "Dimension (<= 6)")->capture_default_str();
  s_enum->add_option("--saturation", enumerate.saturation, "Stop after this many starts without a new point")->capture_default_str();

  for (auto* sub : {s_curves, s_thr, s_id, s_tap, s_sharp, s_ldp, s_enum}) add_common(sub, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, d;
    const int code = app.exit(e, o, d);
    out << o.str();
    err << d.str();
    return code == 0 ? kSuccess : kUsageError;
  }

  auto* sub = app.get_subcommands().front();
  common.seed_given = sub->count("--seed") > 0;
  if (!common.seed_given) {
    std::random_device rd;
    common.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    err << "seed: " << common.seed << '\n';
  }
  if (common.format.empty()) common.format = sub->get_name() == "verify-identity" ? "json" : "csv";
  const Format format = common.format == "json" ? Format::json : Format::csv;

  const std::map<std::string, std::function<Outcome()>> handlers = {
      {"curves", [&] { return cmd_curves(curves, common); }},
      {"thresholds", [&] { return cmd_thresholds(thresholds, common); }},
      {"verify-identity", [&] { return cmd_verify_identity(identity, common); }},
      {"tap", [&] { return cmd_tap(tap_args, common); }},
      {"sharp", [&] { return cmd_sharp(sharp_args, common); }},
      {"goe-ldp", [&] { return cmd_goe_ldp(ldp, common); }},
      {"enumerate", [&] { return cmd_enumerate(enumerate, common); }},
  };

  Outcome outcome;
  try {
    outcome = handlers.at(sub->get_name())();
  } catch (const UsageError& e) {
    err << "pspin " << sub->get_name() << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "pspin " << sub->get_name() << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "pspin " << sub->get_name() << ": " << e.what() << '\n';
    return kCheckFailed;
  }

  if (common.output.empty()) {
    write_report(out, outcome.report, format);
  } else {
    std::ofstream file(common.output, std::ios::binary);
    if (file) write_report(file, outcome.report, format);
    if (!file) {
      err << "pspin: cannot write " << common.output << '\n';
      return kCheckFailed;
    }
  }
  return outcome.code;
}

}  // namespace pspin::cli
