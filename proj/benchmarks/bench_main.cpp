#include <benchmark/benchmark.h>

#include "pspin/enumerate.hpp"
#include "pspin/goe.hpp"
#include "pspin/hermite.hpp"
#include "pspin/interval.hpp"
#include "pspin/landscape.hpp"
#include "pspin/specfun.hpp"

namespace {

using namespace pspin;

void BM_HermitePhi(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::hermite_phi(j, 0.7 * std::sqrt(2.0 * j)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HermitePhi)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_RhoN(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::rho_n(N, 0.9));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RhoN)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oN);

void BM_ExactMeanTotal(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::exact_mean_total(3, N, IntervalSet::below(-1.0)));
}
BENCHMARK(BM_ExactMeanTotal)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_SampleGoeDense(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  Engine rng = make_engine(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(goe::sample_goe(N, goe::kStandardSigma, rng));
}
BENCHMARK(BM_SampleGoeDense)->Arg(3)->Arg(8)->Arg(20)->Arg(100);

void BM_SampleGoeTridiagonal(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  Engine rng = make_engine(1, 0);
  for (auto _ : state) {
    const auto t = goe::sample_goe_tridiagonal(N, goe::kStandardSigma, rng);
    benchmark::DoNotOptimize(goe::count_below(t, 1.7));
  }
}
BENCHMARK(BM_SampleGoeTridiagonal)->Arg(20)->Arg(40)->Arg(100);

void BM_McIdentityRhs(benchmark::State& state) {
  goe::McOptions opt;
  opt.threads = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(goe::mc_identity_rhs_all(3, 3, IntervalSet::real_line(), 100000, 7, opt));
}
BENCHMARK(BM_McIdentityRhs)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto inst = landscape::LandscapeInstance::sample(p, N, seed++);
    benchmark::DoNotOptimize(landscape::enumerate_critical_points(inst));
  }
}
BENCHMARK(BM_Enumerate)->Args({3, 3})->Args({3, 4})->Args({4, 4})->Args({3, 5})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
