#pragma once

#include <becshift/condensation.hpp>

namespace becshift {

struct QuadratureSpec {
  double rel_tol = 1e-7;
  double momentum_cutoff_factor = 30.0;  // multiples of sqrt(2 m k_B T)
  double radial_cutoff_factor = 30.0;    // multiples of the thermal radius
  double condensation_margin = 1e-10;    // mu_c nudged below the infimum by this * k_B T
  void validate() const;
};

// N = (2 pi hbar)^-3 int d3r d3p [e^{beta(eps - mu)} - 1]^-1 for the full
// deformed spectrum eps = p^2/2m + alpha p + U(r), by nested adaptive
// quadrature with the momentum integral innermost. Never touches the
// Bose-function series. Requires mu strictly below the spectrum minimum.
double full_number_quadrature(const PowerLawTrap& trap, const Species& species,
                              const PhysicalConstants& constants,
                              double temperature, double mu,
                              const QuadratureSpec& spec = {});

// The same integral through the Boltzmann expansion sum_j e^{j beta(mu - eps)},
// which factorizes into per-subspace 1-D integrals; an independent second path.
double full_number_series(const PowerLawTrap& trap, const Species& species,
                          const PhysicalConstants& constants, double temperature,
                          double mu, const QuadratureSpec& spec = {});

// Temperature where the full integral at the condensation chemical potential
// (the spectrum infimum: 0 for alpha >= 0, -m alpha^2/2 below, approached from
// below by condensation_margin * k_B T) carries n_total particles.
double oracle_tc(const PowerLawTrap& trap, const Species& species,
                 const PhysicalConstants& constants, double n_total,
                 const QuadratureSpec& spec = {});

}  // namespace becshift
