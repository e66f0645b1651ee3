#pragma once

#include <becshift/oracle.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace becshift::cli {

// Bad or inconsistent configuration; the CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Overrides {
  std::optional<double> temperature;   // K
  std::optional<double> fugacity;      // z in (0, 1]
  std::optional<double> resolution;    // fractional-shift resolution for bounds
  std::optional<double> epsilon_min;   // J, infrared cutoff for fluctuations
  std::optional<double> rho;           // m^-3, mean density for compressibility
  std::optional<QuadratureSpec> quadrature;
};

struct RunConfig {
  Species species;
  PowerLawTrap trap;
  double n_total = 0.0;
  Overrides overrides;
};

// Strict JSON schema: unknown keys are rejected, each trap subspace carries
// exactly one of raw {s, A_J, a_m} / harmonic {frequency, unit} / box
// {volume_m3}, and every quantity must pass the model validators.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace becshift::cli
