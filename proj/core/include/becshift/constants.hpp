#pragma once

#include <cmath>

#include <becshift/errors.hpp>

namespace becshift {

// Strict SI throughout the library: J, m, kg, s, K.
struct PhysicalConstants {
  double hbar = 1.054571817e-34;               // J s
  double k_boltzmann = 1.380649e-23;           // J / K
  double c_light = 2.99792458e8;               // m / s
  double planck_mass = 2.1391943059534772e-8;  // kg, i.e. 1.2e28 eV / c^2

  void validate() const {
    for (double v : {hbar, k_boltzmann, c_light, planck_mass})
      if (!(std::isfinite(v) && v > 0.0))
        throw DomainError("physical constants must be finite and strictly positive");
  }
};

}  // namespace becshift
