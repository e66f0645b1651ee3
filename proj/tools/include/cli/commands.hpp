#pragma once

#include <cli/config.hpp>

#include <json.hpp>

#include <string>

namespace becshift::cli {

using record = nlohmann::ordered_json;

struct DensityGrid {
  int points = 50;     // grid points per run, t = i/points * tmax, i = 0..points
  double tmax = 3.0;   // outermost radius in units of the thermal radius
};

struct ScanRequest {
  std::string axis;    // one of N, s1, xi1, T
  double min = 0.0;
  double max = 0.0;
  int points = 25;
  bool log_spaced = false;
};

record run_tc(const RunConfig& config);
record run_density(const RunConfig& config, const DensityGrid& grid);
record run_fluct(const RunConfig& config);
record run_bound(const RunConfig& config);
record run_scan(const RunConfig& config, const ScanRequest& request);
record run_oracle_check(const RunConfig& config);

}  // namespace becshift::cli
