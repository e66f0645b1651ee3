#include <cli/commands.hpp>

#include <becshift/bounds.hpp>
#include <becshift/fluctuations.hpp>
#include <becshift/numerics/roots.hpp>
#include <becshift/oracle.hpp>

#include <cmath>
#include <numbers>
#include <vector>

namespace becshift::cli {

namespace {

constexpr PhysicalConstants kConstants{};

record echo_inputs(const RunConfig& config) {
  record trap;
  trap["gamma"] = shape_parameter(config.trap);
  trap["geometric_constant"] = geometric_constant(config.trap);
  trap["characteristic_volume_m3"] = characteristic_volume(config.trap);
  trap["subspaces"] = record::array();
  for (const auto& sub : config.trap.subspaces) {
    record s;
    s["n"] = sub.n;
    if (sub.is_box())
      s["s"] = "inf";
    else {
      s["s"] = sub.s;
      s["A_J"] = sub.A;
    }
    s["a_m"] = sub.a;
    trap["subspaces"].push_back(std::move(s));
  }

  record inputs;
  inputs["species"] = {{"mass_kg", config.species.mass}, {"xi1", config.species.xi1}};
  inputs["alpha_m_per_s"] = alpha_of(config.species, kConstants);
  inputs["n_total"] = config.n_total;
  inputs["trap"] = std::move(trap);

  const auto& ov = config.overrides;
  record echo = record::object();
  if (ov.temperature) echo["temperature_K"] = *ov.temperature;
  if (ov.fugacity) echo["fugacity"] = *ov.fugacity;
  if (ov.resolution) echo["resolution"] = *ov.resolution;
  if (ov.epsilon_min) echo["epsilon_min_J"] = *ov.epsilon_min;
  if (ov.rho) echo["rho_m3"] = *ov.rho;
  if (ov.quadrature)
    echo["quadrature"] = {{"rel_tol", ov.quadrature->rel_tol},
                          {"momentum_cutoff_factor", ov.quadrature->momentum_cutoff_factor},
                          {"radial_cutoff_factor", ov.quadrature->radial_cutoff_factor},
                          {"condensation_margin", ov.quadrature->condensation_margin}};
  if (!echo.empty()) inputs["overrides"] = std::move(echo);
  return inputs;
}

record make_record(const char* command, const RunConfig& config) {
  record out;
  out["command"] = command;
  out["inputs"] = echo_inputs(config);
  return out;
}

// Fugacity above T_c from the number equation N(T, z) = n_total; N is
// monotone increasing in z on (0, 1). Right at T_c the root sits at z = 1
// itself (the thermal cloud saturates), so an under-counting upper endpoint
// means the saturated value, not a bracketing failure.
double solve_fugacity(const RunConfig& config, double temperature) {
  const auto count = [&](double z) {
    return number_of_particles(config.trap, config.species, kConstants,
                               {temperature, z}, 0.0) -
           config.n_total;
  };
  const double z_hi = 1.0 - 1e-12;
  if (count(z_hi) <= 0.0) return 1.0;
  return roots::brent(count, 1e-12, z_hi, 1e-13);
}

// Mean-density convenience when no override is given: the gas spread over the
// thermal volume (4 pi / 3) prod_l R_l^{n_l} with U_l(R_l) = k_B T.
double thermal_density(const RunConfig& config, double temperature) {
  const double kt = kConstants.k_boltzmann * temperature;
  double volume = 4.0 * std::numbers::pi / 3.0;
  for (const auto& sub : config.trap.subspaces)
    volume *= std::pow(thermal_radius(sub, kt), sub.n);
  return config.n_total / volume;
}

const char* regime_name(Regime r) { return r == Regime::above ? "above" : "below"; }
const char* anomaly_name(Anomaly a) {
  return a == Anomaly::anomalous ? "anomalous" : "normal";
}

// Shared by cmd_fluct and the T-axis scan: full regime dispatch at one
// temperature, filling defaulted fugacity / epsilon_min / rho as needed.
record fluct_point(const RunConfig& config, double temperature) {
  const auto& trap = config.trap;
  const auto& species = config.species;
  const double gamma = shape_parameter(trap);
  const double alpha = alpha_of(species, kConstants);
  const TcResult tc = solve_tc(trap, species, kConstants, config.n_total);

  FluctuationReport report;
  record row;
  row["temperature_K"] = temperature;
  row["t0_K"] = tc.t0;
  row["tc_K"] = tc.tc;
  if (temperature >= tc.tc) {
    double fugacity;
    const char* source;
    if (config.overrides.fugacity) {
      fugacity = *config.overrides.fugacity;
      source = "override";
    } else {
      fugacity = solve_fugacity(config, temperature);
      source = "number_equation";
    }
    report = variance_above_tc(trap, species, kConstants, temperature, fugacity,
                               config.n_total, tc.t0);
    row["regime"] = regime_name(report.regime);
    row["fugacity"] = fugacity;
    row["fugacity_source"] = source;
  } else {
    std::optional<double> epsilon_min = config.overrides.epsilon_min;
    const char* source = "override";
    if (!epsilon_min) {
      const bool required = (alpha != 0.0 && gamma <= 2.5) || gamma <= 2.0;
      if (required) {
        epsilon_min = default_epsilon_min(trap, species, kConstants);
        source = "default";
      } else {
        source = "none";
      }
    }
    report = variance_below_tc(trap, species, kConstants, temperature,
                               config.n_total, tc.t0, epsilon_min);
    row["regime"] = regime_name(report.regime);
    row["epsilon_min_source"] = source;
    if (report.epsilon_min) row["epsilon_min_J"] = *report.epsilon_min;
  }

  double rho;
  const char* rho_source;
  if (config.overrides.rho) {
    rho = *config.overrides.rho;
    rho_source = "override";
  } else {
    rho = thermal_density(config, temperature);
    rho_source = "thermal_volume_estimate";
  }
  const double kappa = isothermal_compressibility(report, rho, config.n_total,
                                                  temperature, kConstants);

  row["variance"] = report.variance;
  row["normalized_variance"] = report.normalized_variance;
  row["anomaly"] = anomaly_name(report.anomaly);
  row["regularized"] = report.regularized;
  row["rho_m3"] = rho;
  row["rho_source"] = rho_source;
  row["compressibility_per_Pa"] = kappa;
  return row;
}

}  // namespace

record run_tc(const RunConfig& config) {
  record out = make_record("tc", config);
  const TcResult tc = solve_tc(config.trap, config.species, kConstants, config.n_total);
  out["results"] = {{"t0_K", tc.t0},
                    {"tc_K", tc.tc},
                    {"rel_shift", tc.rel_shift},
                    {"rel_shift_first_order",
                     rel_shift_first_order(config.trap, config.species, kConstants,
                                           config.n_total)},
                    {"alpha_m_per_s", tc.alpha},
                    {"smallness_ratio", tc.smallness_ratio}};
  return out;
}

record run_density(const RunConfig& config, const DensityGrid& grid) {
  if (grid.points < 2) throw ConfigError("density requires at least 2 grid points");
  if (!(grid.tmax > 0.0)) throw ConfigError("density tmax must be positive");
  const auto& trap = config.trap;
  const auto& species = config.species;

  record out = make_record("density", config);
  const TcResult tc = solve_tc(trap, species, kConstants, config.n_total);
  const double temperature = config.overrides.temperature.value_or(tc.t0);
  double fugacity;
  if (config.overrides.fugacity)
    fugacity = *config.overrides.fugacity;
  else
    fugacity = temperature >= tc.tc ? solve_fugacity(config, temperature) : 1.0;
  out["results"] = {{"temperature_K", temperature}, {"fugacity", fugacity}};

  const double kt = kConstants.k_boltzmann * temperature;
  std::vector<double> radii(trap.subspaces.size());
  for (std::size_t l = 0; l < trap.subspaces.size(); ++l)
    radii[l] = thermal_radius(trap.subspaces[l], kt);

  out["rows"] = record::array();
  std::vector<double> r(trap.subspaces.size());
  for (int i = 0; i <= grid.points; ++i) {
    const double t = grid.tmax * i / grid.points;
    record row;
    for (std::size_t l = 0; l < trap.subspaces.size(); ++l) {
      r[l] = t * radii[l];
      row["r" + std::to_string(l + 1) + "_m"] = r[l];
    }
    row["density_m3"] =
        spatial_density(trap, species, kConstants, {temperature, fugacity}, r);
    out["rows"].push_back(std::move(row));
  }
  return out;
}

record run_fluct(const RunConfig& config) {
  if (!config.overrides.temperature)
    throw ConfigError("fluct requires overrides.temperature_K");
  record out = make_record("fluct", config);
  out["results"] = fluct_point(config, *config.overrides.temperature);
  return out;
}

record run_bound(const RunConfig& config) {
  record out = make_record("bound", config);
  const double resolution = config.overrides.resolution.value_or(1e-2);
  const BoundResult bound =
      xi1_bound(config.trap, config.species.mass, kConstants, config.n_total, resolution);
  out["results"] = {{"xi1_bound", bound.xi1_bound},
                    {"shift_per_xi1", bound.shift_per_xi1},
                    {"resolution", bound.resolution},
                    {"gamma", bound.gamma}};
  return out;
}

record run_scan(const RunConfig& config, const ScanRequest& request) {
  if (request.points < 2) throw ConfigError("scan requires at least 2 points");
  if (!(request.min < request.max)) throw ConfigError("scan requires min < max");
  if (request.log_spaced && !(request.min > 0.0))
    throw ConfigError("log-spaced scan requires min > 0");

  std::vector<double> values(request.points);
  for (int i = 0; i < request.points; ++i) {
    const double t = static_cast<double>(i) / (request.points - 1);
    values[i] = request.log_spaced
                    ? request.min * std::pow(request.max / request.min, t)
                    : request.min + (request.max - request.min) * t;
  }

  record out = make_record("scan", config);
  out["results"] = {{"axis", request.axis},
                    {"min", request.min},
                    {"max", request.max},
                    {"points", request.points},
                    {"spacing", request.log_spaced ? "log" : "linear"}};
  out["rows"] = record::array();

  if (request.axis == "N") {
    const double resolution = config.overrides.resolution.value_or(1e-2);
    for (double n : values) {
      if (!(n >= 1.0)) throw ConfigError("N scan values must be at least 1");
      record row;
      row["n_total"] = n;
      row["t0_K"] = t0_temperature(config.trap, config.species, kConstants, n);
      row["rel_shift_first_order"] =
          rel_shift_first_order(config.trap, config.species, kConstants, n);
      row["xi1_bound"] =
          xi1_bound(config.trap, config.species.mass, kConstants, n, resolution).xi1_bound;
      out["rows"].push_back(std::move(row));
    }
  } else if (request.axis == "s1") {
    if (config.trap.subspaces.front().is_box())
      throw ConfigError("s1 scan requires a finite-s first subspace");
    for (double s : values) {
      RunConfig point = config;
      point.trap.subspaces.front().s = s;
      record row;
      row["s1"] = s;
      row["gamma"] = shape_parameter(point.trap);
      row["shift_exponent"] = spherical_shift_exponent(s);
      row["rel_shift_first_order"] =
          rel_shift_first_order(point.trap, point.species, kConstants, point.n_total);
      out["rows"].push_back(std::move(row));
    }
  } else if (request.axis == "xi1") {
    const bool box = shape_parameter(config.trap) <= 1.5;
    for (double xi1 : values) {
      RunConfig point = config;
      point.species.xi1 = xi1;
      record row;
      row["xi1"] = xi1;
      row["alpha_m_per_s"] = alpha_of(point.species, kConstants);
      row["rel_shift_first_order"] =
          rel_shift_first_order(point.trap, point.species, kConstants, point.n_total);
      if (!box) {
        const TcResult tc = solve_tc(point.trap, point.species, kConstants, point.n_total);
        row["tc_K"] = tc.tc;
        row["rel_shift"] = tc.rel_shift;
        row["smallness_ratio"] = tc.smallness_ratio;
      }
      out["rows"].push_back(std::move(row));
    }
  } else if (request.axis == "T") {
    for (double temperature : values) {
      if (!(temperature > 0.0)) throw ConfigError("T scan values must be positive");
      out["rows"].push_back(fluct_point(config, temperature));
    }
  } else {
    throw ConfigError("scan axis must be one of N, s1, xi1, T");
  }
  return out;
}

record run_oracle_check(const RunConfig& config) {
  const auto& trap = config.trap;
  const auto& species = config.species;
  const QuadratureSpec spec = config.overrides.quadrature.value_or(QuadratureSpec{});

  record out = make_record("oracle-check", config);
  const double t0 = t0_temperature(trap, species, kConstants, config.n_total);
  const double temperature = config.overrides.temperature.value_or(t0);
  const double fugacity = config.overrides.fugacity.value_or(0.5);
  const double kt = kConstants.k_boltzmann * temperature;
  const double mu = kt * std::log(fugacity);

  const double n_closed =
      number_of_particles(trap, species, kConstants, {temperature, fugacity}, 0.0);
  const double n_quadrature =
      full_number_quadrature(trap, species, kConstants, temperature, mu, spec);
  const double n_series =
      full_number_series(trap, species, kConstants, temperature, mu, spec);

  record results;
  results["temperature_K"] = temperature;
  results["fugacity"] = fugacity;
  results["n_closed_form"] = n_closed;
  results["n_quadrature"] = n_quadrature;
  results["n_series"] = n_series;
  results["rel_diff_quadrature"] = n_quadrature / n_closed - 1.0;
  results["rel_diff_series"] = n_series / n_closed - 1.0;

  const TcResult tc = solve_tc(trap, species, kConstants, config.n_total);
  const double tc_oracle = oracle_tc(trap, species, kConstants, config.n_total, spec);
  results["tc_analytic_K"] = tc.tc;
  results["tc_oracle_K"] = tc_oracle;
  results["tc_rel_diff"] = tc_oracle / tc.tc - 1.0;

  if (species.xi1 != 0.0) {
    Species undeformed = species;
    undeformed.xi1 = 0.0;
    const double tc0_oracle =
        oracle_tc(trap, undeformed, kConstants, config.n_total, spec);
    results["rel_shift_first_order"] =
        rel_shift_first_order(trap, species, kConstants, config.n_total);
    results["rel_shift_oracle"] = tc_oracle / tc0_oracle - 1.0;
  }
  out["results"] = std::move(results);
  return out;
}

}  // namespace becshift::cli
