#include <becshift/model.hpp>

#include <cmath>
#include <numbers>

#include <becshift/specfun.hpp>

namespace becshift {

void Species::validate() const {
  if (!(std::isfinite(mass) && mass > 0.0))
    throw DomainError("Species: mass must be finite and positive");
  if (!std::isfinite(xi1))
    throw DomainError("Species: xi1 must be finite");
}

double alpha_of(const Species& species, const PhysicalConstants& constants) {
  species.validate();
  constants.validate();
  return species.xi1 * species.mass * constants.c_light /
         (2.0 * constants.planck_mass);
}

void PowerLawTrap::validate() const {
  if (subspaces.empty() || subspaces.size() > 3)
    throw DomainError("PowerLawTrap: need between 1 and 3 subspaces");
  int dim = 0;
  for (const auto& sub : subspaces) {
    if (sub.n < 1 || sub.n > 3)
      throw DomainError("PowerLawTrap: subspace dimension must be 1, 2 or 3");
    if (!sub.is_box() && !(std::isfinite(sub.s) && sub.s > 0.0))
      throw DomainError("PowerLawTrap: exponent must be positive or the box marker");
    if (!(std::isfinite(sub.A) && sub.A > 0.0))
      throw DomainError("PowerLawTrap: energy scale must be finite and positive");
    if (!(std::isfinite(sub.a) && sub.a > 0.0))
      throw DomainError("PowerLawTrap: length scale must be finite and positive");
    dim += sub.n;
  }
  if (dim != 3)
    throw DomainError("PowerLawTrap: subspace dimensions must sum to 3");
}

PowerLawTrap PowerLawTrap::harmonic(std::span<const double> omega, double mass,
                                    const PhysicalConstants& constants) {
  constants.validate();
  if (omega.size() != 3)
    throw DomainError("harmonic trap: exactly three axis frequencies required");
  if (!(mass > 0.0)) throw DomainError("harmonic trap: mass must be positive");
  PowerLawTrap trap;
  for (double w : omega) {
    if (!(std::isfinite(w) && w > 0.0))
      throw DomainError("harmonic trap: frequencies must be finite and positive");
    trap.subspaces.push_back({1, 2.0, 0.5 * constants.hbar * w,
                              std::sqrt(constants.hbar / (mass * w))});
  }
  return trap;
}

PowerLawTrap PowerLawTrap::isotropic_harmonic(double omega, double mass,
                                              const PhysicalConstants& constants) {
  constants.validate();
  if (!(std::isfinite(omega) && omega > 0.0))
    throw DomainError("harmonic trap: frequency must be finite and positive");
  if (!(mass > 0.0)) throw DomainError("harmonic trap: mass must be positive");
  PowerLawTrap trap;
  trap.subspaces.push_back({3, 2.0, 0.5 * constants.hbar * omega,
                            std::sqrt(constants.hbar / (mass * omega))});
  return trap;
}

PowerLawTrap PowerLawTrap::spherical(double s, double A, double a) {
  PowerLawTrap trap;
  trap.subspaces.push_back({3, s, A, a});
  trap.validate();
  return trap;
}

PowerLawTrap PowerLawTrap::box(double volume) {
  if (!(std::isfinite(volume) && volume > 0.0))
    throw DomainError("box trap: volume must be finite and positive");
  const double a = std::cbrt(volume / (4.0 / 3.0 * std::numbers::pi));
  PowerLawTrap trap;
  trap.subspaces.push_back({3, box_exponent, 1.0, a});  // A is unused for walls
  return trap;
}

double shape_parameter(const PowerLawTrap& trap) {
  trap.validate();
  double gamma = 1.5;
  for (const auto& sub : trap.subspaces)
    if (!sub.is_box()) gamma += sub.n / sub.s;
  return gamma;
}

double geometric_constant(const PowerLawTrap& trap) {
  trap.validate();
  double c = 1.0;
  for (const auto& sub : trap.subspaces)
    c *= std::pow(std::numbers::pi, 0.5 * sub.n) / gamma_fn(0.5 * sub.n + 1.0);
  return c;
}

double characteristic_volume(const PowerLawTrap& trap) {
  trap.validate();
  double v = 1.0 / geometric_constant(trap);
  for (const auto& sub : trap.subspaces) {
    if (sub.is_box()) {
      v /= std::pow(sub.a, sub.n);  // A^{n/s} -> 1 and Gamma(n/s+1) -> 1
    } else {
      const double ratio = sub.n / sub.s;
      v *= std::pow(sub.A, ratio) /
           (std::pow(sub.a, sub.n) * gamma_fn(ratio + 1.0));
    }
  }
  return v;
}

double potential_energy(const TrapSubspace& sub, double r) {
  const double x = std::abs(r) / sub.a;
  if (sub.is_box())
    return x > 1.0 ? std::numeric_limits<double>::infinity() : 0.0;
  return sub.A * std::pow(x, sub.s);
}

double potential_energy(const PowerLawTrap& trap, std::span<const double> r) {
  trap.validate();
  if (r.size() != trap.subspaces.size())
    throw DomainError("potential_energy: one radial coordinate per subspace");
  double u = 0.0;
  for (size_t l = 0; l < r.size(); ++l)
    u += potential_energy(trap.subspaces[l], r[l]);
  return u;
}

double thermal_radius(const TrapSubspace& sub, double kT) {
  if (!(kT > 0.0)) throw DomainError("thermal_radius: kT must be positive");
  if (sub.is_box()) return sub.a;
  return sub.a * std::pow(kT / sub.A, 1.0 / sub.s);
}

}  // namespace becshift
