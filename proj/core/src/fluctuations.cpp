#include <becshift/fluctuations.hpp>

#include <cmath>
#include <numbers>

namespace becshift {

namespace {

constexpr double pi = std::numbers::pi;

double deformation_weight(double mass, double kt) {
  return std::sqrt(8.0 * mass / (pi * kt));  // multiplies alpha in the variance
}

}  // namespace

Anomaly classify_anomaly(double gamma, double alpha) {
  if (!(gamma >= 1.5))
    throw DomainError("classify_anomaly: gamma below the trap range [3/2, ...)");
  return (gamma <= 2.5 && alpha != 0.0) ? Anomaly::anomalous : Anomaly::normal;
}

double default_epsilon_min(const PowerLawTrap& trap, const Species& species,
                           const PhysicalConstants& constants) {
  trap.validate();
  species.validate();
  constants.validate();
  const double hbar = constants.hbar;
  const double m = species.mass;

  double eps = 0.0;
  for (const auto& sub : trap.subspaces) {
    if (sub.is_box()) {
      eps += hbar * hbar / (2.0 * m * sub.a * sub.a);
      continue;
    }
    // min over r of hbar^2/(2 m r^2) + A (r/a)^s at
    // r* = (hbar^2 a^s / (m s A))^{1/(s+2)}, evaluated through logarithms:
    // a^s alone under- or overflows for stiff exponents.
    const double log_r_star =
        (2.0 * std::log(hbar) + sub.s * std::log(sub.a) - std::log(m * sub.s * sub.A)) /
        (sub.s + 2.0);
    const double r_star = std::exp(log_r_star);
    eps += hbar * hbar / (2.0 * m * r_star * r_star) +
           sub.A * std::exp(sub.s * (log_r_star - std::log(sub.a)));
  }
  return eps;
}

FluctuationReport variance_above_tc(const PowerLawTrap& trap, const Species& species,
                                    const PhysicalConstants& constants,
                                    double temperature, double fugacity,
                                    double n_total, double t0, const Accuracy& acc) {
  if (!(temperature > 0.0) || !(t0 > 0.0))
    throw DomainError("variance_above_tc: temperatures must be positive");
  if (!(n_total >= 1.0))
    throw DomainError("variance_above_tc: n_total must be at least 1");
  if (!(fugacity >= 0.0) || fugacity >= 1.0)
    throw DomainError("variance_above_tc: needs 0 <= z < 1 above T_c");

  const double gamma = shape_parameter(trap);
  const double alpha = alpha_of(species, constants);
  const double kt = constants.k_boltzmann * temperature;

  double bracket = bose_fn(gamma - 1.0, fugacity, acc);
  if (alpha != 0.0) {
    if (gamma <= 1.5)
      throw DomainError(
          "variance_above_tc: the deformation term needs gamma > 3/2");
    bracket -= alpha * deformation_weight(species.mass, kt) *
               bose_fn(gamma - 1.5, fugacity, acc);
  }

  FluctuationReport report;
  report.regime = Regime::above;
  report.anomaly = Anomaly::normal;
  report.variance = bracket / riemann_zeta(gamma) *
                    std::pow(temperature / t0, gamma) * n_total;
  report.normalized_variance = report.variance / n_total;
  return report;
}

FluctuationReport variance_below_tc(const PowerLawTrap& trap, const Species& species,
                                    const PhysicalConstants& constants,
                                    double temperature, double n_total, double t0,
                                    std::optional<double> epsilon_min,
                                    const Accuracy& acc) {
  if (!(temperature > 0.0) || !(t0 > 0.0))
    throw DomainError("variance_below_tc: temperatures must be positive");
  if (!(n_total >= 1.0))
    throw DomainError("variance_below_tc: n_total must be at least 1");

  const double gamma = shape_parameter(trap);
  const double alpha = alpha_of(species, constants);
  const double kt = constants.k_boltzmann * temperature;

  // beta_c rides on the deformed T_c; for a box this propagates the
  // DivergenceError of solve_tc whenever alpha != 0.
  const TcResult tcr = solve_tc(trap, species, constants, n_total);
  if (!(temperature < tcr.tc))
    throw DomainError("variance_below_tc: called at or above T_c");

  double leading, deformation = 0.0;
  FluctuationReport report;
  report.regime = Regime::below;
  report.anomaly = classify_anomaly(gamma, alpha);

  if (epsilon_min) {
    // Replace each divergent zeta(nu) by g_nu(e^{-beta_c (eps - m alpha^2/2)});
    // the condition eps > m alpha^2/2 keeps the argument below 1.
    const double shifted = *epsilon_min - 0.5 * species.mass * alpha * alpha;
    const double beta_c = 1.0 / (constants.k_boltzmann * tcr.tc);
    const double arg = std::exp(-beta_c * shifted);
    if (!(arg < 1.0)) {
      if (arg == 1.0)
        throw DivergenceError("variance_below_tc: regularized argument hit 1");
      throw DomainError(
          "variance_below_tc: epsilon_min must exceed m alpha^2/2");
    }
    report.regularized = true;
    report.epsilon_min = *epsilon_min;
    leading = (gamma - 1.0 <= 1.0) ? bose_fn(gamma - 1.0, arg, acc)
                                   : riemann_zeta(gamma - 1.0);
    if (alpha != 0.0) deformation = bose_fn(gamma - 1.5, arg, acc);
  } else {
    if (alpha != 0.0 && gamma <= 2.5)
      throw RegularizationError(
          "variance_below_tc: anomalous regime (gamma <= 5/2, alpha != 0) "
          "requires epsilon_min");
    if (gamma <= 2.0)
      throw RegularizationError(
          "variance_below_tc: zeta(gamma - 1) diverges for gamma <= 2; "
          "supply epsilon_min");
    leading = riemann_zeta(gamma - 1.0);
    if (alpha != 0.0) deformation = riemann_zeta(gamma - 1.5);
  }

  const double bracket =
      leading - alpha * deformation_weight(species.mass, kt) * deformation;
  report.variance = bracket / riemann_zeta(gamma) *
                    std::pow(temperature / t0, gamma) * n_total;
  report.normalized_variance = report.variance / n_total;
  return report;
}

double isothermal_compressibility(const FluctuationReport& report, double rho,
                                  double n_total, double temperature,
                                  const PhysicalConstants& constants) {
  if (!(rho > 0.0))
    throw DomainError("isothermal_compressibility: rho must be positive");
  if (!(n_total >= 1.0))
    throw DomainError("isothermal_compressibility: n_total must be at least 1");
  if (!(temperature > 0.0))
    throw DomainError("isothermal_compressibility: temperature must be positive");
  return report.variance /
         (rho * n_total * constants.k_boltzmann * temperature);
}

}  // namespace becshift
