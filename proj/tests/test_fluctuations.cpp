#include <doctest.h>

#include <becshift/fluctuations.hpp>

#include <cmath>

using namespace becshift;

namespace {

constexpr PhysicalConstants kC{};
constexpr double kMass = 15e-26;  // kg

const PowerLawTrap& harmonic_trap() {
  static const PowerLawTrap trap = PowerLawTrap::isotropic_harmonic(100.0, kMass, kC);
  return trap;
}

}  // namespace

TEST_SUITE("fluctuations") {

TEST_CASE("below tc, alpha = 0, gamma = 3: the zeta(2)/zeta(3)/8 anchor at T0/2") {
  const double n_total = 1e6;
  const Species sp{kMass, 0.0};
  const double t0 = t0_temperature(harmonic_trap(), sp, kC, n_total);
  const auto report =
      variance_below_tc(harmonic_trap(), sp, kC, 0.5 * t0, n_total, t0);
  const double expect = riemann_zeta(2.0) / riemann_zeta(3.0) / 8.0;
  CHECK(report.normalized_variance == doctest::Approx(expect).epsilon(1e-12));
  CHECK(report.regime == Regime::below);
  CHECK(report.anomaly == Anomaly::normal);
  CHECK_FALSE(report.regularized);
}

TEST_CASE("below tc: variance is extensive (proportional to N)") {
  const Species sp{kMass, 0.0};
  const double n1 = 1e6, n2 = 4e6;
  const double t0_1 = t0_temperature(harmonic_trap(), sp, kC, n1);
  const double t0_2 = t0_temperature(harmonic_trap(), sp, kC, n2);
  const auto r1 = variance_below_tc(harmonic_trap(), sp, kC, 0.5 * t0_1, n1, t0_1);
  const auto r2 = variance_below_tc(harmonic_trap(), sp, kC, 0.5 * t0_2, n2, t0_2);
  CHECK(r1.normalized_variance == doctest::Approx(r2.normalized_variance).epsilon(1e-12));
  CHECK(r2.variance == doctest::Approx(4.0 * r1.variance).epsilon(1e-12));
}

TEST_CASE("above tc: matches a direct evaluation of the bracket") {
  const double n_total = 1e6, z = 0.8;
  const Species sp{kMass, 0.0};
  const double t0 = t0_temperature(harmonic_trap(), sp, kC, n_total);
  const double temperature = 1.7 * t0;
  const auto report = variance_above_tc(harmonic_trap(), sp, kC, temperature, z,
                                        n_total, t0);
  const double expect = bose_fn(2.0, z) / riemann_zeta(3.0) *
                        std::pow(temperature / t0, 3.0) * n_total;
  CHECK(report.variance == doctest::Approx(expect).epsilon(1e-11));
  CHECK(report.regime == Regime::above);
  CHECK(report.anomaly == Anomaly::normal);
}

TEST_CASE("above tc: the deformation term is linear in alpha with the stated weight") {
  const double n_total = 1e6, z = 0.8;
  const double t0 = t0_temperature(harmonic_trap(), Species{kMass, 0.0}, kC, n_total);
  const double temperature = 1.5 * t0;
  const double kt = kC.k_boltzmann * temperature;
  const auto at = [&](double xi1) {
    return variance_above_tc(harmonic_trap(), Species{kMass, xi1}, kC, temperature, z,
                             n_total, t0)
        .variance;
  };
  const double xi1 = 1e3;
  const double alpha = alpha_of(Species{kMass, xi1}, kC);
  const double slope = (at(xi1) - at(-xi1)) / 2.0;
  const double expect = -alpha * std::sqrt(8.0 * kMass / (std::numbers::pi * kt)) *
                        bose_fn(1.5, z) / riemann_zeta(3.0) *
                        std::pow(temperature / t0, 3.0) * n_total;
  CHECK(slope == doctest::Approx(expect).epsilon(1e-10));
  // and the deformation reduces the variance for xi1 > 0
  CHECK(at(xi1) < at(0.0));
}

TEST_CASE("classify_anomaly: anomalous exactly for gamma <= 5/2 with alpha != 0") {
  for (double gamma : {1.6, 2.0, 2.49, 2.5}) {
    CHECK(classify_anomaly(gamma, 1e-9) == Anomaly::anomalous);
    CHECK(classify_anomaly(gamma, -1e-9) == Anomaly::anomalous);
    CHECK(classify_anomaly(gamma, 0.0) == Anomaly::normal);
  }
  for (double gamma : {2.51, 3.0, 4.0}) {
    CHECK(classify_anomaly(gamma, 1e-9) == Anomaly::normal);
    CHECK(classify_anomaly(gamma, 0.0) == Anomaly::normal);
  }
  CHECK_THROWS_AS(classify_anomaly(1.2, 0.0), DomainError);
}

TEST_CASE("default_epsilon_min: harmonic ground state is exactly hbar omega") {
  const double omega = 100.0;
  // isotropic n = 3: minimizing hbar^2/(2mr^2) + m omega^2 r^2 / 2 gives hbar omega
  CHECK(default_epsilon_min(PowerLawTrap::isotropic_harmonic(omega, kMass, kC),
                            Species{kMass, 0.0}, kC) ==
        doctest::Approx(kC.hbar * omega).epsilon(1e-13));
  // three Cartesian axes triple-count the kinetic pressure: 3 hbar omega,
  // an upper estimate of the true 3/2 hbar omega within the stated factor 2
  double w[3] = {omega, omega, omega};
  const double cart =
      default_epsilon_min(PowerLawTrap::harmonic(w, kMass, kC), Species{kMass, 0.0}, kC);
  CHECK(cart == doctest::Approx(3.0 * kC.hbar * omega).epsilon(1e-13));
  CHECK(cart >= 1.5 * kC.hbar * omega);
  CHECK(cart < 2.0 * 1.5 * kC.hbar * omega + 1e-40);
}

TEST_CASE("default_epsilon_min: box wall value and the stiff-trap limit") {
  const auto box = PowerLawTrap::box(1e-15);
  const double a = box.subspaces[0].a;
  const double expect = kC.hbar * kC.hbar / (2.0 * kMass * a * a);
  CHECK(default_epsilon_min(box, Species{kMass, 0.0}, kC) ==
        doctest::Approx(expect).epsilon(1e-13));
  // a very stiff power law approaches the same hard-wall estimate from above
  const auto stiff = PowerLawTrap::spherical(2000.0, 1e-30, a);
  const double stiff_eps = default_epsilon_min(stiff, Species{kMass, 0.0}, kC);
  CHECK(stiff_eps == doctest::Approx(expect).epsilon(0.05));
  CHECK(stiff_eps > expect);
}

TEST_CASE("below tc at gamma <= 5/2 with deformation: regularization is mandatory") {
  const auto trap = PowerLawTrap::spherical(3.0, 1e-30, 1e-4);  // gamma = 5/2
  const Species sp{kMass, 10.0};
  const double n_total = 1e6;
  const double t0 = t0_temperature(trap, sp, kC, n_total);
  CHECK_THROWS_AS(variance_below_tc(trap, sp, kC, 0.5 * t0, n_total, t0),
                  RegularizationError);
  // with the default ground-state cutoff the variance is finite and positive
  const auto report =
      variance_below_tc(trap, sp, kC, 0.5 * t0, n_total, t0,
                        default_epsilon_min(trap, sp, kC));
  CHECK(report.regularized);
  CHECK(std::isfinite(report.variance));
  CHECK(report.variance > 0.0);
  CHECK(report.anomaly == Anomaly::anomalous);
  CHECK(report.epsilon_min.has_value());
}

TEST_CASE("below tc at gamma <= 2: even the undeformed gas needs the cutoff") {
  const auto trap = PowerLawTrap::spherical(6.0, 1e-30, 1e-4);  // gamma = 2
  const Species sp{kMass, 0.0};
  const double n_total = 1e6;
  const double t0 = t0_temperature(trap, sp, kC, n_total);
  CHECK_THROWS_AS(variance_below_tc(trap, sp, kC, 0.5 * t0, n_total, t0),
                  RegularizationError);
  const auto report = variance_below_tc(trap, sp, kC, 0.5 * t0, n_total, t0,
                                        default_epsilon_min(trap, sp, kC));
  CHECK(report.regularized);
  CHECK(std::isfinite(report.variance));
  CHECK(report.variance > 0.0);
  CHECK(report.anomaly == Anomaly::normal);  // anomaly needs alpha != 0
}

TEST_CASE("below tc: regularized variance converges to the pure-zeta value") {
  const double n_total = 1e6;
  const Species sp{kMass, 10.0};
  const double t0 = t0_temperature(harmonic_trap(), sp, kC, n_total);
  const double reference =
      variance_below_tc(harmonic_trap(), sp, kC, 0.5 * t0, n_total, t0).variance;
  const double eps0 = default_epsilon_min(harmonic_trap(), sp, kC);
  double prev_gap = std::numeric_limits<double>::infinity();
  double gap = prev_gap;
  for (int k = 0; k <= 12; ++k) {
    const double v =
        variance_below_tc(harmonic_trap(), sp, kC, 0.5 * t0, n_total, t0,
                          eps0 * std::pow(4.0, -k))
            .variance;
    gap = std::abs(v - reference);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(gap / reference < 1e-6);
}

TEST_CASE("below tc: domain handling at and above tc") {
  const double n_total = 1e6;
  const Species sp{kMass, 0.0};
  const double t0 = t0_temperature(harmonic_trap(), sp, kC, n_total);
  CHECK_THROWS_AS(variance_below_tc(harmonic_trap(), sp, kC, t0, n_total, t0),
                  DomainError);
  CHECK_THROWS_AS(variance_below_tc(harmonic_trap(), sp, kC, 2.0 * t0, n_total, t0),
                  DomainError);
  CHECK_THROWS_AS(variance_above_tc(harmonic_trap(), sp, kC, 2.0 * t0, 1.5, n_total, t0),
                  DomainError);
}

TEST_CASE("isothermal_compressibility: definition and invariances") {
  const double n_total = 1e6;
  const Species sp{kMass, 0.0};
  const double t0 = t0_temperature(harmonic_trap(), sp, kC, n_total);
  const double temperature = 0.5 * t0;
  const auto report =
      variance_below_tc(harmonic_trap(), sp, kC, temperature, n_total, t0);
  const double rho = 1e18;
  const double kappa = isothermal_compressibility(report, rho, n_total, temperature, kC);
  CHECK(kappa == doctest::Approx(report.variance /
                                 (rho * n_total * kC.k_boltzmann * temperature))
                     .epsilon(1e-13));
  // classical ideal gas: variance = N makes kappa = 1/(rho k_B T)
  FluctuationReport poisson;
  poisson.variance = n_total;
  poisson.normalized_variance = 1.0;
  CHECK(isothermal_compressibility(poisson, rho, n_total, temperature, kC) ==
        doctest::Approx(1.0 / (rho * kC.k_boltzmann * temperature)).epsilon(1e-13));
  // kappa depends on N only through variance/N: quadrupling N at the same
  // normalized variance and density leaves it unchanged
  FluctuationReport scaled;
  scaled.variance = 4.0 * report.variance;
  scaled.normalized_variance = report.normalized_variance;
  CHECK(isothermal_compressibility(scaled, rho, 4.0 * n_total, temperature, kC) ==
        doctest::Approx(kappa).epsilon(1e-13));
  CHECK_THROWS_AS(isothermal_compressibility(report, -1.0, n_total, temperature, kC),
                  DomainError);
}

TEST_CASE("variance report bookkeeping for the anomalous flag below tc") {
  // gamma = 2 trap, deformed: anomalous and necessarily regularized
  const auto trap = PowerLawTrap::spherical(6.0, 1e-30, 1e-4);
  const Species sp{kMass, 10.0};
  const double n_total = 1e6;
  const double t0 = t0_temperature(trap, sp, kC, n_total);
  const auto report = variance_below_tc(trap, sp, kC, 0.4 * t0, n_total, t0,
                                        default_epsilon_min(trap, sp, kC));
  CHECK(report.anomaly == Anomaly::anomalous);
  CHECK(report.regularized);
}

}  // TEST_SUITE
