#include <benchmark/benchmark.h>

#include <becshift/oracle.hpp>

using namespace becshift;

namespace {

constexpr PhysicalConstants kC{};
constexpr double kMass = 15e-26;
const Species kSpecies{kMass, 1e3};

PowerLawTrap isotropic() {
  double w[3] = {100.0, 100.0, 100.0};
  return PowerLawTrap::harmonic(w, kMass, kC);
}

PowerLawTrap cartesian() {
  double w[3] = {60.0, 100.0, 140.0};
  return PowerLawTrap::harmonic(w, kMass, kC);
}

}  // namespace

// Single radial level: no interpolation table, fully adaptive.
static void BM_quadrature_1d(benchmark::State& state) {
  const auto trap = isotropic();
  const double t = 1e-8, mu = -0.5 * kC.k_boltzmann * t;
  for (auto _ : state)
    benchmark::DoNotOptimize(full_number_quadrature(trap, kSpecies, kC, t, mu));
}
BENCHMARK(BM_quadrature_1d);

// Three nested levels: dominated by the momentum-integral table build.
static void BM_quadrature_3d(benchmark::State& state) {
  const auto trap = cartesian();
  const double t = 1e-8, mu = -0.5 * kC.k_boltzmann * t;
  for (auto _ : state)
    benchmark::DoNotOptimize(full_number_quadrature(trap, kSpecies, kC, t, mu));
}
BENCHMARK(BM_quadrature_3d);

static void BM_series_3d(benchmark::State& state) {
  const auto trap = cartesian();
  const double t = 1e-8, mu = -0.5 * kC.k_boltzmann * t;
  for (auto _ : state)
    benchmark::DoNotOptimize(full_number_series(trap, kSpecies, kC, t, mu));
}
BENCHMARK(BM_series_3d);

static void BM_oracle_tc(benchmark::State& state) {
  const auto trap = isotropic();
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle_tc(trap, kSpecies, kC, 1e4));
}
BENCHMARK(BM_oracle_tc);

BENCHMARK_MAIN();
