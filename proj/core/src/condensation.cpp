#include <becshift/condensation.hpp>

#include <cmath>
#include <numbers>

#include <becshift/numerics/roots.hpp>

namespace becshift {

namespace {

constexpr double pi = std::numbers::pi;

double check_positive_count(double n_total) {
  if (!(std::isfinite(n_total) && n_total >= 1.0))
    throw DomainError("particle number must be finite and at least 1");
  return n_total;
}

}  // namespace

void ThermoPoint::validate() const {
  if (!(std::isfinite(temperature) && temperature > 0.0))
    throw DomainError("ThermoPoint: temperature must be finite and positive");
  if (!(fugacity >= 0.0) || !(fugacity <= 1.0))
    throw DomainError("ThermoPoint: fugacity must lie in [0, 1]");
}

double smallness_ratio(const Species& species, const PhysicalConstants& constants,
                       double temperature) {
  if (!(temperature > 0.0))
    throw DomainError("smallness_ratio: temperature must be positive");
  const double alpha = alpha_of(species, constants);
  return 0.5 * species.mass * alpha * alpha /
         (constants.k_boltzmann * temperature);
}

double number_of_particles(const PowerLawTrap& trap, const Species& species,
                           const PhysicalConstants& constants,
                           const ThermoPoint& point, double n0,
                           const Accuracy& acc) {
  point.validate();
  if (!(n0 >= 0.0)) throw DomainError("number_of_particles: n0 must be >= 0");
  const double gamma = shape_parameter(trap);
  const double z = point.fugacity;
  if (z == 1.0 && gamma <= 1.5)
    throw DivergenceError(
        "number_of_particles: g_gamma(1) diverges for gamma <= 3/2");

  const double hbar = constants.hbar;
  const double m = species.mass;
  const double alpha = alpha_of(species, constants);
  const double kt = constants.k_boltzmann * point.temperature;
  const double v_char = characteristic_volume(trap);

  double excited = std::pow(m / (2.0 * pi * hbar * hbar), 1.5) *
                   bose_fn(gamma, z, acc) * std::pow(kt, gamma);
  if (alpha != 0.0)
    excited -= alpha * (m * m / (pi * pi * hbar * hbar * hbar)) *
               bose_fn(gamma - 0.5, z, acc) * std::pow(kt, gamma - 0.5);
  return n0 + excited / v_char;
}

double spatial_density(const PowerLawTrap& trap, const Species& species,
                       const PhysicalConstants& constants, const ThermoPoint& point,
                       std::span<const double> r, const Accuracy& acc) {
  point.validate();
  const double hbar = constants.hbar;
  const double m = species.mass;
  const double alpha = alpha_of(species, constants);
  const double kt = constants.k_boltzmann * point.temperature;
  const double u = potential_energy(trap, r);
  if (std::isinf(u)) return 0.0;  // outside the walls
  if (point.fugacity == 0.0) return 0.0;

  // w = z e^{beta(m alpha^2/2 - U)}
  const double mu_eff_minus_u = kt * std::log(point.fugacity) +
                                0.5 * m * alpha * alpha - u;
  const double w = std::exp(mu_eff_minus_u / kt);
  if (w > 1.0)
    throw DomainError("spatial_density: over-saturated point (w > 1)");

  const double lambda = std::sqrt(2.0 * pi * hbar * hbar / (m * kt));
  double n = bose_fn(1.5, w, acc) / (lambda * lambda * lambda);
  if (alpha != 0.0) {
    if (w == 1.0)
      throw DivergenceError(
          "spatial_density: g_1 and g_1/2 diverge at w = 1 with alpha != 0");
    n -= alpha * (2.0 * m / (pi * hbar)) * bose_fn(1.0, w, acc) /
         (lambda * lambda);
    n += alpha * alpha * (m * m / (2.0 * pi * hbar * hbar)) *
         bose_fn(0.5, w, acc) / lambda;
  }
  return n;
}

double t0_temperature(const PowerLawTrap& trap, const Species& species,
                      const PhysicalConstants& constants, double n_total) {
  check_positive_count(n_total);
  species.validate();
  constants.validate();
  const double gamma = shape_parameter(trap);
  const double v_char = characteristic_volume(trap);
  const double kt0 =
      std::pow(n_total * v_char *
                   std::pow(2.0 * pi * constants.hbar * constants.hbar /
                                species.mass,
                            1.5) /
                   riemann_zeta(gamma),
               1.0 / gamma);
  return kt0 / constants.k_boltzmann;
}

TcResult solve_tc(const PowerLawTrap& trap, const Species& species,
                  const PhysicalConstants& constants, double n_total) {
  const double t0 = t0_temperature(trap, species, constants, n_total);
  const double alpha = alpha_of(species, constants);

  TcResult result;
  result.t0 = t0;
  result.alpha = alpha;
  if (alpha == 0.0) {
    result.tc = t0;
    result.rel_shift = 0.0;
    result.smallness_ratio = 0.0;
    return result;
  }

  const double gamma = shape_parameter(trap);
  if (gamma <= 1.5)
    throw DivergenceError(
        "solve_tc: zeta(gamma - 1/2) diverges for the box; "
        "the first-order box shift has its own closed form");

  const double kt0 = constants.k_boltzmann * t0;
  const double coeff = alpha * std::sqrt(8.0 * species.mass / pi) *
                       riemann_zeta(gamma - 0.5) / riemann_zeta(gamma);
  auto f = [&](double x) {
    return std::pow(x, gamma) - coeff * std::pow(x, gamma - 0.5) -
           std::pow(kt0, gamma);
  };

  // Start from [kT0/2, 2 kT0] and widen geometrically to at most [kT0/16, 16 kT0].
  auto [lo, hi] = roots::widen_bracket(f, kt0, 2.0, 16.0);
  const double ktc = roots::brent(f, lo, hi, 1e-12);

  result.tc = ktc / constants.k_boltzmann;
  result.rel_shift = result.tc / t0 - 1.0;
  result.smallness_ratio = smallness_ratio(species, constants, result.tc);
  return result;
}

double rel_shift_first_order(const PowerLawTrap& trap, const Species& species,
                             const PhysicalConstants& constants, double n_total) {
  check_positive_count(n_total);
  const double alpha = alpha_of(species, constants);
  const double gamma = shape_parameter(trap);

  if (gamma <= 1.5) {
    // Pure box: shift = alpha 2m (V zeta(3))^{1/3} / (3 hbar) N^{-1/3}.
    const double volume = 1.0 / characteristic_volume(trap);
    return alpha * 2.0 * species.mass *
           std::cbrt(volume * riemann_zeta(3.0)) /
           (3.0 * constants.hbar) / std::cbrt(n_total);
  }

  const double kt0 =
      constants.k_boltzmann * t0_temperature(trap, species, constants, n_total);
  return (alpha / gamma) * std::sqrt(8.0 * species.mass / pi) *
         riemann_zeta(gamma - 0.5) / riemann_zeta(gamma) / std::sqrt(kt0);
}

double spherical_shift_exponent(double s1) {
  if (std::isinf(s1) && s1 > 0.0) return -1.0 / 3.0;
  if (!(s1 > 0.0))
    throw DomainError("spherical_shift_exponent: s1 must be positive");
  return -s1 / (3.0 * (s1 + 2.0));
}

}  // namespace becshift
