#pragma once

#include <becshift/condensation.hpp>

namespace becshift {

struct BoundResult {
  double xi1_bound = 0.0;      // |xi1| below this evades the given resolution
  double shift_per_xi1 = 0.0;  // |d(DeltaT_c/T0)/d xi1|, first order
  double resolution = 0.0;     // fractional-shift resolution, echoed
  double mass = 0.0;           // kg, echoed
  double n_total = 0.0;        // echoed
  double gamma = 0.0;          // trap shape parameter, echoed
};

// xi1_bound = resolution / |rel_shift_first_order at xi1 = 1|.
BoundResult xi1_bound(const PowerLawTrap& trap, double mass,
                      const PhysicalConstants& constants, double n_total,
                      double resolution);

}  // namespace becshift
