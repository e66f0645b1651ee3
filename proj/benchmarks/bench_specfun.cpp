#include <benchmark/benchmark.h>

#include <becshift/specfun.hpp>

using namespace becshift;

static void BM_zeta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(riemann_zeta(2.5));
}
BENCHMARK(BM_zeta);

static void BM_bose_series_moderate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bose_fn(1.5, 0.5));
}
BENCHMARK(BM_bose_series_moderate);

static void BM_bose_series_near_one(benchmark::State& state) {
  // z = 0.99 is the last point served by the series before the integral takes over.
  for (auto _ : state) benchmark::DoNotOptimize(bose_fn(1.5, 0.99));
}
BENCHMARK(BM_bose_series_near_one);

static void BM_bose_integral(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bose_fn(1.5, 0.999));
}
BENCHMARK(BM_bose_integral);

static void BM_bose_integral_at_one(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bose_fn_integral(1.6, 1.0));
}
BENCHMARK(BM_bose_integral_at_one);

BENCHMARK_MAIN();
