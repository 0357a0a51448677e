#include "maslovkit/analyzer.hpp"
#include "maslovkit/laurent.hpp"
#include "maslovkit/symplectic.hpp"

#include <benchmark/benchmark.h>

using namespace maslovkit;

static void BM_NullityOracleShearPair(benchmark::State& state) {
  const auto a = NormalFormBlock::shear(1, 1);
  const auto b = NormalFormBlock::shear(-1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(nullity_oracle(a, b, 48));
}
BENCHMARK(BM_NullityOracleShearPair);

static void BM_NullityOracleRotation(benchmark::State& state) {
  const auto a = NormalFormBlock::shear(1, 1);
  const auto b = NormalFormBlock::rotation_block(Rational(5, 12));
  for (auto _ : state) {
    for (long long m = 1; m <= 48; ++m) benchmark::DoNotOptimize(nullity_oracle(a, b, m));
  }
}
BENCHMARK(BM_NullityOracleRotation);

static void BM_BuildMorseSeries(benchmark::State& state) {
  // Slowest in-grid series: i-hat = 1/12 needs ~5000 iterates at N=400.
  OrbitConfig config;
  config.normal_form = Case2{Rational(1, 12)};
  config.i1 = 0;
  const int period = minimal_period(config.normal_form);
  for (int r = 1; r < period; ++r) config.k_vectors[r] = CriticalTypeVector{{1}};
  config.k_vectors[period] = CriticalTypeVector{{0, 22, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(build_morse_series(config, 400));
}
BENCHMARK(BM_BuildMorseSeries);

static void BM_CheckPositivity(benchmark::State& state) {
  LaurentSeries m = LaurentSeries::geometric_even(400);
  LaurentSeries u(399);
  for (long long d = -2; d <= 399; d += 3) u.add_term(d, 2);
  m = m + u.times_one_plus_t();
  for (auto _ : state) benchmark::DoNotOptimize(check_positivity(m));
}
BENCHMARK(BM_CheckPositivity);

static void BM_AnalyzeRotationOrbit(benchmark::State& state) {
  OrbitConfig config;
  config.normal_form = Case2{Rational(1, 12)};
  config.i1 = 0;
  for (auto _ : state) benchmark::DoNotOptimize(analyze_single_orbit(config, 400));
}
BENCHMARK(BM_AnalyzeRotationOrbit);

static void BM_DefaultSweep(benchmark::State& state) {
  for (auto _ : state) {
    const SweepReport report = sweep_single_orbit_cases(-4, 40, 12, 400);
    benchmark::DoNotOptimize(report.feasible_count());
  }
}
BENCHMARK(BM_DefaultSweep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
