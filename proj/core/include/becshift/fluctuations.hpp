#pragma once

#include <optional>

#include <becshift/condensation.hpp>

namespace becshift {

enum class Regime { above, below };
enum class Anomaly { normal, anomalous };

struct FluctuationReport {
  double variance = 0.0;             // particle-number variance
  double normalized_variance = 0.0;  // variance / N
  std::optional<double> compressibility;  // 1/Pa, filled by isothermal_compressibility callers
  Regime regime = Regime::above;
  Anomaly anomaly = Anomaly::normal;
  bool regularized = false;
  std::optional<double> epsilon_min;  // J, present when regularized
};

// Anomalous iff gamma <= 5/2 and alpha != 0 (the below-T_c classification).
Anomaly classify_anomaly(double gamma, double alpha);

// Ground-state energy estimate: per subspace, minimize over r the functional
// hbar^2/(2 m r^2) + A (r/a)^s (closed form; the wall value hbar^2/(2 m a^2)
// for a box), then sum the subspaces.
double default_epsilon_min(const PowerLawTrap& trap, const Species& species,
                           const PhysicalConstants& constants);

// Variance for T > T_c at fugacity z < 1:
//   [ g_{gamma-1}(z) - alpha g_{gamma-3/2}(z) sqrt(8m/(pi k_B T)) ] / zeta(gamma)
//   * (T/T0)^gamma * N.
// Always classified normal in this regime.
FluctuationReport variance_above_tc(const PowerLawTrap& trap, const Species& species,
                                    const PhysicalConstants& constants,
                                    double temperature, double fugacity,
                                    double n_total, double t0,
                                    const Accuracy& acc = {});

// Variance for T < T_c: the z = 1 form of the above. For gamma <= 5/2 with
// alpha != 0 (and for gamma <= 2 even at alpha = 0) the zeta factors diverge
// and an infrared cutoff is required: each divergent zeta(nu) is replaced by
// g_nu(e^{-beta_c (epsilon_min - m alpha^2/2)}) with beta_c at the deformed T_c.
// Supplying epsilon_min always switches to the regularized evaluation.
FluctuationReport variance_below_tc(const PowerLawTrap& trap, const Species& species,
                                    const PhysicalConstants& constants,
                                    double temperature, double n_total, double t0,
                                    std::optional<double> epsilon_min = std::nullopt,
                                    const Accuracy& acc = {});

// kappa_T = variance / (rho N k_B T).
double isothermal_compressibility(const FluctuationReport& report, double rho,
                                  double n_total, double temperature,
                                  const PhysicalConstants& constants);

}  // namespace becshift
