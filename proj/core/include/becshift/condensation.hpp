#pragma once

#include <span>

#include <becshift/model.hpp>
#include <becshift/specfun.hpp>

namespace becshift {

struct ThermoPoint {
  double temperature = 0.0;  // K
  double fugacity = 0.0;     // z = e^{beta mu}, in [0, 1]
  void validate() const;
};

struct TcResult {
  double t0 = 0.0;               // K, undeformed condensation temperature
  double tc = 0.0;               // K, deformed
  double rel_shift = 0.0;        // tc/t0 - 1
  double alpha = 0.0;            // m/s
  double smallness_ratio = 0.0;  // (m alpha^2/2) / (k_B tc)
};

// (m alpha^2/2) / (k_B T); the first-order treatment needs this << 1.
double smallness_ratio(const Species& species, const PhysicalConstants& constants,
                       double temperature);

// N = n0 + (1/V_char) [ (m/2\pi hbar^2)^{3/2} g_gamma(z) (kT)^gamma
//                       - alpha (m^2/\pi^2 hbar^3) g_{gamma-1/2}(z) (kT)^{gamma-1/2} ].
double number_of_particles(const PowerLawTrap& trap, const Species& species,
                           const PhysicalConstants& constants,
                           const ThermoPoint& point, double n0,
                           const Accuracy& acc = {});

// n(r) = lambda^-3 g_{3/2}(w) - alpha lambda^-2 (2m/pi hbar) g_1(w)
//        + alpha^2 lambda^-1 (m^2/2 pi hbar^2) g_{1/2}(w),
// w = e^{beta(mu_eff - U(r))}, mu_eff = mu + m alpha^2/2; r as in potential_energy.
double spatial_density(const PowerLawTrap& trap, const Species& species,
                       const PhysicalConstants& constants, const ThermoPoint& point,
                       std::span<const double> r, const Accuracy& acc = {});

// Undeformed T0 = (1/k_B) [ N V_char (2 pi hbar^2 / m)^{3/2} / zeta(gamma) ]^{1/gamma};
// the box evaluates with gamma = 3/2 and zeta(3/2).
double t0_temperature(const PowerLawTrap& trap, const Species& species,
                      const PhysicalConstants& constants, double n_total);

// Deformed T_c: root in x = k_B T_c of
//   x^gamma = (k_B T0)^gamma + alpha sqrt(8m/pi) (zeta(gamma-1/2)/zeta(gamma)) x^{gamma-1/2}.
// Exact T_c = T0 at alpha = 0. Box traps with alpha != 0 hit the zeta(1) pole
// and raise DivergenceError; use rel_shift_first_order for the box instead.
TcResult solve_tc(const PowerLawTrap& trap, const Species& species,
                  const PhysicalConstants& constants, double n_total);

// First-order fractional shift
//   (alpha/gamma) sqrt(8m/pi) (zeta(gamma-1/2)/zeta(gamma)) / sqrt(k_B T0),
// which scales as N^{-1/(2 gamma)}; the box (gamma = 3/2) uses the closed form
//   alpha 2m (V zeta(3))^{1/3} / (3 hbar) N^{-1/3} with V = 1/V_char.
double rel_shift_first_order(const PowerLawTrap& trap, const Species& species,
                             const PhysicalConstants& constants, double n_total);

// d ln(shift)/d ln N for the spherical family: -s1/(3(s1+2)); -1/3 at s1 = inf.
double spherical_shift_exponent(double s1);

}  // namespace becshift
