// End-to-end checks of the installed binary: exit codes, output formats, and
// determinism, driven through a shell the way a user would run it.
// Usage: cli_exec_tests <path-to-becshift-binary> <fixture-directory>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

int failures = 0;

void check(bool ok, const std::string& what) {
  std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
  if (!ok) ++failures;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) cells.push_back(cell);
  return cells;
}

std::vector<std::string> lines_of(const std::string& text) {
  auto lines = split(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  return header.size();
}

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

// A section that dies (bad JSON from a failed run, missing key) counts as one
// failure and lets the remaining sections proceed.
template <typename Fn>
void section(const std::string& name, Fn&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    check(false, name + " aborted: " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: cli_exec_tests <binary> <data-dir>\n";
    return 2;
  }
  std::cout << std::unitbuf;  // survive an abort with the trail intact
  const std::string bin = std::string("\"") + argv[1] + "\"";
  const std::string data = argv[2];
  const auto fixture = [&](const char* name) {
    return " --config \"" + data + "/" + name + "\"";
  };

  // --- tc: happy path, values, and byte-level determinism -------------------
  section("tc", [&] {
    const auto first = run(bin + " tc" + fixture("harmonic_ladder.json"));
    check(first.exit_code == 0, "tc exits 0 on a valid config");
    const auto rec = json::parse(first.out, nullptr, false);
    check(!rec.is_discarded(), "tc emits valid JSON");
    check(rec["command"] == "tc", "record names its command");
    const double t0 = rec["results"]["t0_K"].get<double>();
    const double shift = rec["results"]["rel_shift"].get<double>();
    const double first_order = rec["results"]["rel_shift_first_order"].get<double>();
    check(close_rel(t0, 9.050957683174697e-9, 1e-10),
          "t0 for the 10/10/20 rad/s trap at N = 1e6");
    check(close_rel(shift, 6.8359549e-7, 1e-5), "rel_shift at xi1 = 1");
    check(close_rel(shift, first_order, 1e-3), "first order tracks the exact root");
    check(rec["inputs"]["trap"]["gamma"] == 3.0, "harmonic trap echoes gamma = 3");

    const auto second = run(bin + " tc" + fixture("harmonic_ladder.json"));
    check(second.exit_code == 0 && second.out == first.out,
          "repeated runs are byte-identical");
  });

  // --- unit conventions: Hz frequencies are 2 pi times faster ---------------
  section("unit conventions", [&] {
    const auto rad = run(bin + " tc" + fixture("harmonic_ladder.json"));
    const auto hz = run(bin + " tc" + fixture("harmonic_hz.json"));
    check(hz.exit_code == 0, "tc accepts Hz frequencies");
    const double t0_rad = json::parse(rad.out)["results"]["t0_K"].get<double>();
    const double t0_hz = json::parse(hz.out)["results"]["t0_K"].get<double>();
    check(close_rel(t0_hz / t0_rad, 2.0 * 3.14159265358979324, 1e-12),
          "t0 scales by 2 pi between the unit conventions");
  });

  // --- csv format ------------------------------------------------------------
  section("csv format", [&] {
    const auto csv = run(bin + " tc" + fixture("harmonic_ladder.json") + " --format csv");
    check(csv.exit_code == 0, "tc --format csv exits 0");
    const auto lines = lines_of(csv.out);
    check(lines.size() == 2, "scalar csv is header plus one data line");
    const auto header = split(lines[0], ',');
    const auto cells = split(lines[1], ',');
    check(header.size() == cells.size(), "csv header and data have equal arity");
    const auto idx = column(header, "results.t0_K");
    check(idx < header.size(), "csv carries the dotted results.t0_K column");
    check(cells.at(idx) == "9.05095768317e-09", "csv floats carry 12 significant digits");
  });

  // --- --output writes the same bytes to a file ------------------------------
  section("--output", [&] {
    const std::string path = "cli_exec_tc_out.json";
    const auto direct = run(bin + " tc" + fixture("harmonic_ladder.json"));
    const auto redirected =
        run(bin + " tc" + fixture("harmonic_ladder.json") + " --output " + path);
    check(redirected.exit_code == 0 && redirected.out.empty(),
          "--output leaves stdout empty");
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    check(buf.str() == direct.out, "--output file matches stdout bytes");
    std::remove(path.c_str());
  });

  // --- fluct: both regimes ----------------------------------------------------
  section("fluct", [&] {
    const auto below = run(bin + " fluct" + fixture("fluct_below.json"));
    check(below.exit_code == 0, "fluct below T_c exits 0");
    const auto rec = json::parse(below.out);
    check(rec["results"]["regime"] == "below", "T = 4.5 nK sits below T_c");
    check(rec["results"]["anomaly"] == "normal", "gamma = 3 keeps fluctuations normal");
    check(rec["results"]["variance"].get<double>() > 0.0, "variance is positive");
    check(rec["results"]["epsilon_min_source"] == "none",
          "no infrared cutoff is needed at gamma = 3");

    const auto above = run(bin + " fluct" + fixture("fluct_above.json"));
    check(above.exit_code == 0, "fluct above T_c exits 0");
    const auto hot = json::parse(above.out);
    check(hot["results"]["regime"] == "above", "T = 20 nK sits above T_c");
    check(hot["results"]["fugacity_source"] == "number_equation",
          "fugacity comes from the number equation when not overridden");
    const double z = hot["results"]["fugacity"].get<double>();
    check(z > 0.0 && z < 1.0, "solved fugacity lies in (0, 1)");
  });

  // --- density ---------------------------------------------------------------
  section("density", [&] {
    const auto res = run(bin + " density" + fixture("harmonic_hz.json") + " --points 10");
    check(res.exit_code == 0, "density exits 0 for the undeformed gas");
    const auto rec = json::parse(res.out);
    check(rec["rows"].size() == 11, "density emits points + 1 samples");
    const double center = rec["rows"].front()["density_m3"].get<double>();
    const double edge = rec["rows"].back()["density_m3"].get<double>();
    check(center > edge && edge >= 0.0, "density falls off along the ray");
    check(rec["rows"].front().contains("r1_m"), "rows carry per-subspace radii");

    // At z = 1 a positive-alpha gas is over-saturated at the trap center; the
    // exact evaluator refuses rather than silently clipping.
    const auto sat = run(bin + " density" + fixture("harmonic_ladder.json"));
    check(sat.exit_code == 3, "deformed z = 1 density reports a numerical error");

    // Above T_c the solved fugacity keeps the same config evaluable.
    const auto hot = run(bin + " density" + fixture("fluct_above.json"));
    check(hot.exit_code == 0, "deformed density works above T_c");
  });

  // --- bound ------------------------------------------------------------------
  section("bound", [&] {
    const auto res = run(bin + " bound" + fixture("harmonic_ladder.json"));
    check(res.exit_code == 0, "bound exits 0");
    const auto rec = json::parse(res.out);
    const double b = rec["results"]["xi1_bound"].get<double>();
    check(std::abs(std::log10(b) - 4.0) <= 1.0, "ladder bound sits near 1e4");

    const auto box = run(bin + " bound" + fixture("box_xi1.json"));
    check(box.exit_code == 0, "box bound works through the closed form");
  });

  // --- scan: N axis slope from the csv ----------------------------------------
  section("scan", [&] {
    const auto res = run(bin + " scan" + fixture("harmonic_ladder.json") +
                         " --axis N --min 1e4 --max 1e8 --points 3 --log --format csv");
    check(res.exit_code == 0, "scan over N exits 0");
    const auto lines = lines_of(res.out);
    check(lines.size() == 4, "scan csv is header plus one line per point");
    const auto header = split(lines[0], ',');
    const auto n_idx = column(header, "n_total");
    const auto s_idx = column(header, "rel_shift_first_order");
    check(n_idx < header.size() && s_idx < header.size(),
          "scan csv exposes the swept value and the shift");
    const auto row_lo = split(lines[1], ','), row_hi = split(lines[3], ',');
    const double slope =
        std::log(std::stod(row_hi[s_idx]) / std::stod(row_lo[s_idx])) /
        std::log(std::stod(row_hi[n_idx]) / std::stod(row_lo[n_idx]));
    check(close_rel(slope, -1.0 / 6.0, 1e-9), "shift falls as N^{-1/6} at gamma = 3");

    const auto twice = run(bin + " scan" + fixture("harmonic_ladder.json") +
                           " --axis N --min 1e4 --max 1e8 --points 3 --log --format csv");
    check(twice.out == res.out, "scan output is deterministic");
  });

  // --- oracle-check -------------------------------------------------------------
  section("oracle-check", [&] {
    const auto res = run(bin + " oracle-check" + fixture("oracle_harmonic.json"));
    check(res.exit_code == 0, "oracle-check exits 0");
    const auto rec = json::parse(res.out);
    check(std::abs(rec["results"]["rel_diff_quadrature"].get<double>()) < 1e-5,
          "quadrature agrees with the closed form");
    check(std::abs(rec["results"]["rel_diff_series"].get<double>()) < 1e-5,
          "series agrees with the closed form");
    check(std::abs(rec["results"]["tc_rel_diff"].get<double>()) < 1e-4,
          "oracle T_c agrees with the analytic root");
  });

  // --- failure modes map to the documented exit codes ---------------------------
  section("exit codes", [&] {
    check(run(bin + " tc" + fixture("bad_schema.json")).exit_code == 2,
          "unknown config key exits 2");
    check(run(bin + " tc --config " + data + "/does_not_exist.json").exit_code == 2,
          "missing config file exits 2");
    check(run(bin + " tc").exit_code == 2, "missing --config exits 2");
    check(run(bin + " frobnicate" + fixture("harmonic_ladder.json")).exit_code == 2,
          "unknown subcommand exits 2");
    check(run(bin + " tc" + fixture("harmonic_ladder.json") + " --format yaml").exit_code == 2,
          "unknown format exits 2");
    check(run(bin + " scan" + fixture("harmonic_ladder.json") +
              " --axis Q --min 1 --max 2").exit_code == 2,
          "unknown scan axis exits 2");
    check(run(bin).exit_code == 2, "no subcommand exits 2");
    check(run(bin + " --help").exit_code == 0, "--help exits 0");
    check(run(bin + " fluct" + fixture("harmonic_ladder.json")).exit_code == 2,
          "fluct without a temperature override exits 2");
    check(run(bin + " tc" + fixture("box_xi1.json")).exit_code == 3,
          "deformed box T_c reports the divergence as a numerical error");
    check(run(bin + " scan" + fixture("harmonic_ladder.json") +
              " --axis s1 --min 5 --max 1 --points 3").exit_code == 2,
          "inverted scan range exits 2");
  });

  std::cout << (failures == 0 ? "all cli checks passed\n"
                              : std::to_string(failures) + " cli checks FAILED\n");
  return failures == 0 ? 0 : 1;
}
