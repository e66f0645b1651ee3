#include <becshift/oracle.hpp>

#include <becshift/numerics/quadrature.hpp>
#include <becshift/numerics/roots.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace becshift {

namespace {

constexpr double pi = std::numbers::pi;

// Surface of the unit sphere in n dimensions: 2, 2pi, 4pi for n = 1, 2, 3.
double unit_surface(int n) {
  return static_cast<double>(n) * std::pow(pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

// Kinetic minimum over p >= 0: zero for alpha >= 0, -m alpha^2/2 otherwise.
double spectrum_minimum(const Species& species, const PhysicalConstants& constants) {
  const double alpha = alpha_of(species, constants);
  return alpha < 0.0 ? -0.5 * species.mass * alpha * alpha : 0.0;
}

void check_mu_below_spectrum(double mu, const Species& species,
                             const PhysicalConstants& constants) {
  if (!(mu < spectrum_minimum(species, constants)))
    throw DomainError("chemical potential must lie strictly below the spectrum minimum");
}

// Nested integrator over r_1 .. r_d, p with the momentum integral innermost.
// For two or more spatial levels the momentum integral M(U) is tabulated on a
// uniform grid in w = sqrt(beta U) and interpolated by a natural cubic spline
// of ln M; M is smooth in w on the half-line even at U -> 0, where it is only
// sqrt-regular in U itself.
struct NestedIntegrator {
  const PowerLawTrap& trap;
  double beta, mass, alpha, mu;
  double level_tol;
  double p_cut;
  std::vector<double> r_cut;

  bool use_cache = false;
  double w_max = 0.0, w_step = 0.0;
  std::vector<double> cache_log_m, cache_y2;

  NestedIntegrator(const PowerLawTrap& trap_, const Species& species,
                   const PhysicalConstants& constants, double temperature, double mu_,
                   const QuadratureSpec& spec)
      : trap(trap_), mu(mu_) {
    const double kt = constants.k_boltzmann * temperature;
    beta = 1.0 / kt;
    mass = species.mass;
    alpha = alpha_of(species, constants);
    // Split the tolerance across the nesting depth; errors compound level by level.
    level_tol = spec.rel_tol / (static_cast<double>(trap.subspaces.size()) + 1.0);
    p_cut = spec.momentum_cutoff_factor * std::sqrt(2.0 * mass * kt) +
            2.0 * mass * std::abs(alpha);
    for (const auto& sub : trap.subspaces)
      r_cut.push_back(sub.is_box() ? sub.a : spec.radial_cutoff_factor * thermal_radius(sub, kt));
    use_cache = trap.subspaces.size() >= 2;
    if (use_cache) build_cache();
  }

  // int_0^pcut p^2 / (e^{beta(p^2/2m + alpha p + u - mu)} - 1) dp
  double momentum_integral(double u) const {
    const auto f = [&](double p) {
      const double x = beta * (p * p / (2.0 * mass) + alpha * p + u - mu);
      return x > 700.0 ? 0.0 : p * p / std::expm1(x);
    };
    return quad::integrate(f, 0.0, p_cut, level_tol, 0.0, 3000);
  }

  void build_cache() {
    // Potential energies reachable inside the radial cutoffs; beyond
    // beta(u - mu) ~ 705 the occupancy underflows anyway.
    double u_reach = 0.0;
    for (std::size_t l = 0; l < trap.subspaces.size(); ++l)
      u_reach += trap.subspaces[l].is_box()
                     ? 0.0
                     : potential_energy(trap.subspaces[l], r_cut[l]);
    const double u_cap = std::min(u_reach, std::max(mu, 0.0) + 705.0 / beta);
    w_max = std::sqrt(beta * std::max(u_cap, 1.0 / beta));
    constexpr int nodes = 801;
    w_step = w_max / (nodes - 1);
    cache_log_m.resize(nodes);
    for (int i = 0; i < nodes; ++i) {
      const double w = w_step * i;
      const double m_val = momentum_integral(w * w / beta);
      cache_log_m[i] = std::log(m_val + 1e-300);
    }
    // Natural cubic spline: sigma_{i-1} + 4 sigma_i + sigma_{i+1} =
    // (6/h^2)(y_{i+1} - 2 y_i + y_{i-1}) with sigma_0 = sigma_{n-1} = 0,
    // solved by the Thomas algorithm.
    cache_y2.assign(nodes, 0.0);
    std::vector<double> cp(nodes, 0.0), dp(nodes, 0.0);
    for (int i = 1; i < nodes - 1; ++i) {
      const double d = 6.0 *
                       (cache_log_m[i + 1] - 2.0 * cache_log_m[i] + cache_log_m[i - 1]) /
                       (w_step * w_step);
      const double m = 4.0 - cp[i - 1];
      cp[i] = 1.0 / m;
      dp[i] = (d - dp[i - 1]) / m;
    }
    for (int i = nodes - 2; i >= 1; --i) cache_y2[i] = dp[i] - cp[i] * cache_y2[i + 1];
  }

  double momentum_cached(double u) const {
    const double w = std::sqrt(beta * u);
    if (w >= w_max) return momentum_integral(u);  // past the table: corner values only
    const auto n = cache_log_m.size();
    const std::size_t k = std::min(n - 2, static_cast<std::size_t>(w / w_step));
    const double a = (w_step * (k + 1) - w) / w_step;
    const double b = 1.0 - a;
    const double log_m = a * cache_log_m[k] + b * cache_log_m[k + 1] +
                         ((a * a * a - a) * cache_y2[k] + (b * b * b - b) * cache_y2[k + 1]) *
                             w_step * w_step / 6.0;
    return std::exp(log_m);
  }

  double spatial(std::size_t level, double u_acc) const {
    if (level == trap.subspaces.size())
      return use_cache ? momentum_cached(u_acc) : momentum_integral(u_acc);
    const auto& sub = trap.subspaces[level];
    const auto f = [&](double r) {
      const double u = u_acc + (sub.is_box() ? 0.0 : potential_energy(sub, r));
      const double weight = sub.n == 1 ? 1.0 : std::pow(r, sub.n - 1);
      return weight * spatial(level + 1, u);
    };
    return quad::integrate(f, 0.0, r_cut[level], level_tol, 0.0, 3000);
  }

  double run() const { return spatial(0, 0.0); }
};

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || rel_tol > 1e-6)
    throw DomainError("quadrature rel_tol must lie in (0, 1e-6]");
  if (!(momentum_cutoff_factor >= 10.0) || !(radial_cutoff_factor >= 10.0))
    throw DomainError("cutoff factors must be at least 10");
  if (!(condensation_margin > 0.0) || condensation_margin > 1e-3)
    throw DomainError("condensation_margin must lie in (0, 1e-3]");
}

double full_number_quadrature(const PowerLawTrap& trap, const Species& species,
                              const PhysicalConstants& constants, double temperature,
                              double mu, const QuadratureSpec& spec) {
  trap.validate();
  species.validate();
  constants.validate();
  spec.validate();
  if (!(temperature > 0.0)) throw DomainError("temperature must be positive");
  check_mu_below_spectrum(mu, species, constants);

  NestedIntegrator integrator(trap, species, constants, temperature, mu, spec);
  const double h3 = std::pow(2.0 * pi * constants.hbar, 3);
  double prefactor = unit_surface(3) / h3;  // angular momentum shell
  for (const auto& sub : trap.subspaces) prefactor *= unit_surface(sub.n);
  return prefactor * integrator.run();
}

double full_number_series(const PowerLawTrap& trap, const Species& species,
                          const PhysicalConstants& constants, double temperature,
                          double mu, const QuadratureSpec& spec) {
  trap.validate();
  species.validate();
  constants.validate();
  spec.validate();
  if (!(temperature > 0.0)) throw DomainError("temperature must be positive");
  check_mu_below_spectrum(mu, species, constants);

  const double kt = constants.k_boltzmann * temperature;
  const double beta = 1.0 / kt;
  const double mass = species.mass;
  const double alpha = alpha_of(species, constants);
  // Factoring the kinetic minimum out of every j-term keeps the Boltzmann
  // weights in floating-point range for any alpha sign.
  const double shift = spectrum_minimum(species, constants);
  const double p_cut = spec.momentum_cutoff_factor * std::sqrt(2.0 * mass * kt) +
                       2.0 * mass * std::abs(alpha);
  const double term_tol = 0.1 * spec.rel_tol;

  const double h3 = std::pow(2.0 * pi * constants.hbar, 3);
  double prefactor = unit_surface(3) / h3;
  for (const auto& sub : trap.subspaces) prefactor *= unit_surface(sub.n);

  double total = 0.0, prev_term = 0.0;
  constexpr int j_max = 100000;
  for (int j = 1; j <= j_max; ++j) {
    const double jb = j * beta;
    double term = std::exp(jb * (mu - shift));
    if (term == 0.0) break;  // deeper terms only smaller
    term *= quad::integrate(
        [&](double p) {
          const double x = jb * (p * p / (2.0 * mass) + alpha * p - shift);
          return x > 700.0 ? 0.0 : p * p * std::exp(-x);
        },
        0.0, p_cut, term_tol, 0.0, 2000);
    for (const auto& sub : trap.subspaces) {
      const double r_cut =
          sub.is_box() ? sub.a : spec.radial_cutoff_factor * thermal_radius(sub, kt);
      term *= quad::integrate(
          [&](double r) {
            const double x = sub.is_box() ? 0.0 : jb * potential_energy(sub, r);
            const double weight = sub.n == 1 ? 1.0 : std::pow(r, sub.n - 1);
            return x > 700.0 ? 0.0 : weight * std::exp(-x);
          },
          0.0, r_cut, term_tol, 0.0, 2000);
    }
    total += term;
    if (j >= 4 && term < prev_term) {
      const double ratio = term / prev_term;
      const double tail = term * ratio / (1.0 - ratio);  // geometric envelope
      if (tail <= 0.5 * spec.rel_tol * total) return prefactor * total;
    }
    prev_term = term;
  }
  throw AccuracyError("Boltzmann expansion did not reach the requested tolerance",
                      prefactor * total);
}

double oracle_tc(const PowerLawTrap& trap, const Species& species,
                 const PhysicalConstants& constants, double n_total,
                 const QuadratureSpec& spec) {
  trap.validate();
  species.validate();
  constants.validate();
  spec.validate();
  if (!(n_total >= 1.0)) throw DomainError("n_total must be at least 1");

  const double mu_base = spectrum_minimum(species, constants);
  const auto count = [&](double temperature) {
    const double mu =
        mu_base - spec.condensation_margin * constants.k_boltzmann * temperature;
    return full_number_quadrature(trap, species, constants, temperature, mu, spec) -
           n_total;
  };

  double seed;
  try {
    seed = solve_tc(trap, species, constants, n_total).tc;
  } catch (const Error&) {
    seed = t0_temperature(trap, species, constants, n_total);
  }
  const auto [lo, hi] = roots::widen_bracket(count, seed, 1.3, 32.0);
  return roots::brent(count, lo, hi, std::max(1e-12, spec.rel_tol / 3.0));
}

}  // namespace becshift
