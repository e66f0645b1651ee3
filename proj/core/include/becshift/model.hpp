#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include <becshift/constants.hpp>
#include <becshift/errors.hpp>

namespace becshift {

// Exponent marker for hard-wall (box) subspaces.
inline constexpr double box_exponent = std::numeric_limits<double>::infinity();

struct Species {
  double mass = 0.0;  // kg
  double xi1 = 0.0;   // dimensionless deformation parameter, any sign
  void validate() const;
};

// alpha = xi1 * m * c / (2 M_p): the velocity scale of the deformed dispersion
// eps = p^2/2m + alpha p. Sign follows xi1.
double alpha_of(const Species& species, const PhysicalConstants& constants);

// One factorized block of U(r) = sum_l A_l |r_l / a_l|^{s_l}, where r_l is the
// radial coordinate of an n_l-dimensional subspace.
struct TrapSubspace {
  int n = 1;       // subspace dimension, 1..3
  double s = 2.0;  // power-law exponent > 0; box_exponent for hard walls
  double A = 0.0;  // energy scale, J (a positive placeholder for walls)
  double a = 0.0;  // length scale, m

  bool is_box() const { return std::isinf(s); }
};

struct PowerLawTrap {
  std::vector<TrapSubspace> subspaces;

  void validate() const;  // 1..3 subspaces, each n in 1..3, sum n = 3, scales positive

  // One Cartesian axis per frequency: A = hbar w / 2, a = sqrt(hbar / (m w)).
  static PowerLawTrap harmonic(std::span<const double> omega, double mass,
                               const PhysicalConstants& constants);
  // The isotropic oscillator as a single spherical n = 3 subspace.
  static PowerLawTrap isotropic_harmonic(double omega, double mass,
                                         const PhysicalConstants& constants);
  // Spherical power-law trap U = A (r/a)^s.
  static PowerLawTrap spherical(double s, double A, double a);
  // Hard walls enclosing volume V, represented as a spherical subspace.
  static PowerLawTrap box(double volume);
};

// gamma = 3/2 + sum_l n_l / s_l; box subspaces contribute zero to the sum.
double shape_parameter(const PowerLawTrap& trap);

// C = prod_l pi^{n_l/2} / Gamma(n_l/2 + 1), the product of unit-ball volumes.
double geometric_constant(const PowerLawTrap& trap);

// V_char = prod_l A_l^{n_l/s_l} a_l^{-n_l} / (C prod_l Gamma(n_l/s_l + 1)),
// units J^{sum n/s} m^-3; reduces to 1/volume for a pure box.
double characteristic_volume(const PowerLawTrap& trap);

// U(r); r supplies one radial coordinate per subspace (absolute value taken).
// Infinite outside the walls of a box subspace.
// Single-subspace potential at radial coordinate r; infinity outside a box wall.
double potential_energy(const TrapSubspace& sub, double r);

double potential_energy(const PowerLawTrap& trap, std::span<const double> r);

// Radius where the subspace potential reaches kT (the wall itself for a box).
double thermal_radius(const TrapSubspace& sub, double kT);

}  // namespace becshift
