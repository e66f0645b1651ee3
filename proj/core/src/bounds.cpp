#include <becshift/bounds.hpp>

#include <cmath>

namespace becshift {

BoundResult xi1_bound(const PowerLawTrap& trap, double mass,
                      const PhysicalConstants& constants, double n_total,
                      double resolution) {
  if (!(std::isfinite(resolution) && resolution > 0.0))
    throw DomainError("xi1_bound: resolution must be finite and positive");

  const Species unit_deformation{mass, 1.0};
  const double sensitivity = std::abs(
      rel_shift_first_order(trap, unit_deformation, constants, n_total));
  if (!(sensitivity > 0.0))
    throw DomainError("xi1_bound: the trap produces no first-order shift");

  BoundResult result;
  result.shift_per_xi1 = sensitivity;
  result.resolution = resolution;
  result.xi1_bound = resolution / sensitivity;
  result.mass = mass;
  result.n_total = n_total;
  result.gamma = shape_parameter(trap);
  return result;
}

}  // namespace becshift
