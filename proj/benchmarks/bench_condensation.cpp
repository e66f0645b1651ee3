#include <benchmark/benchmark.h>

#include <becshift/condensation.hpp>

using namespace becshift;

namespace {

constexpr PhysicalConstants kC{};
constexpr double kMass = 15e-26;

PowerLawTrap ladder() {
  double w[3] = {10.0, 10.0, 20.0};
  return PowerLawTrap::harmonic(w, kMass, kC);
}

}  // namespace

static void BM_t0(benchmark::State& state) {
  const auto trap = ladder();
  const Species species{kMass, 0.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(t0_temperature(trap, species, kC, 1e6));
}
BENCHMARK(BM_t0);

static void BM_solve_tc(benchmark::State& state) {
  const auto trap = ladder();
  const Species species{kMass, 1.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_tc(trap, species, kC, 1e6));
}
BENCHMARK(BM_solve_tc);

static void BM_number_equation(benchmark::State& state) {
  const auto trap = ladder();
  const Species species{kMass, 1.0};
  const double t = t0_temperature(trap, species, kC, 1e6);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        number_of_particles(trap, species, kC, {0.9 * t, 0.7}, 0.0));
}
BENCHMARK(BM_number_equation);

static void BM_density_point(benchmark::State& state) {
  const auto trap = ladder();
  const Species species{kMass, 1.0};
  const double t = t0_temperature(trap, species, kC, 1e6);
  const double kt = kC.k_boltzmann * t;
  const double r[3] = {0.5 * thermal_radius(trap.subspaces[0], kt),
                       0.5 * thermal_radius(trap.subspaces[1], kt),
                       0.5 * thermal_radius(trap.subspaces[2], kt)};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        spatial_density(trap, species, kC, {0.9 * t, 0.7}, r));
}
BENCHMARK(BM_density_point);

BENCHMARK_MAIN();
