#include <cli/commands.hpp>
#include <cli/output.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace {

struct CommonOpts {
  std::string config;
  std::string output = "-";
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config, "JSON configuration file")->required();
  cmd->add_option("--output", opts.output, "output path, or - for stdout");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  using namespace becshift::cli;

  CLI::App app{
      "Condensation temperature, deformation shift, fluctuations, and xi1 bounds\n"
      "for an ideal Bose gas with a linear-in-momentum dispersion correction."};
  app.require_subcommand(1);

  CommonOpts tc_opts, density_opts, fluct_opts, bound_opts, scan_opts, oracle_opts;
  DensityGrid grid;
  ScanRequest scan;

  auto* tc = app.add_subcommand("tc", "condensation temperature and its shift");
  add_common(tc, tc_opts);

  auto* density = app.add_subcommand("density", "spatial density profile along a radial ray");
  add_common(density, density_opts);
  density->add_option("--points", grid.points, "grid intervals along the ray")
      ->check(CLI::Range(2, 100000));
  density->add_option("--tmax", grid.tmax, "outermost radius in thermal radii")
      ->check(CLI::PositiveNumber);

  auto* fluct = app.add_subcommand("fluct", "particle-number fluctuations and compressibility");
  add_common(fluct, fluct_opts);

  auto* bound = app.add_subcommand("bound", "xi1 bound from a shift-resolution target");
  add_common(bound, bound_opts);

  auto* scan_cmd = app.add_subcommand("scan", "sweep one axis and tabulate the results");
  add_common(scan_cmd, scan_opts);
  scan_cmd->add_option("--axis", scan.axis, "scan axis")
      ->required()
      ->check(CLI::IsMember({"N", "s1", "xi1", "T"}));
  scan_cmd->add_option("--min", scan.min, "first axis value")->required();
  scan_cmd->add_option("--max", scan.max, "last axis value")->required();
  scan_cmd->add_option("--points", scan.points, "number of grid points")
      ->check(CLI::Range(2, 100000));
  scan_cmd->add_flag("--log", scan.log_spaced, "geometric instead of linear spacing");

  auto* oracle = app.add_subcommand(
      "oracle-check", "closed forms vs direct phase-space integration");
  add_common(oracle, oracle_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const CommonOpts* opts = nullptr;
  try {
    record rec;
    if (app.got_subcommand(tc)) {
      opts = &tc_opts;
      rec = run_tc(load_config(opts->config));
    } else if (app.got_subcommand(density)) {
      opts = &density_opts;
      rec = run_density(load_config(opts->config), grid);
    } else if (app.got_subcommand(fluct)) {
      opts = &fluct_opts;
      rec = run_fluct(load_config(opts->config));
    } else if (app.got_subcommand(bound)) {
      opts = &bound_opts;
      rec = run_bound(load_config(opts->config));
    } else if (app.got_subcommand(scan_cmd)) {
      opts = &scan_opts;
      rec = run_scan(load_config(opts->config), scan);
    } else {
      opts = &oracle_opts;
      rec = run_oracle_check(load_config(opts->config));
    }
    write_output(opts->output, opts->format == "csv" ? to_csv_text(rec) : to_json_text(rec));
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const becshift::Error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
