#include <cli/config.hpp>

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace becshift::cli {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || key == k;
    if (!known) fail(where, "unknown key \"" + key + "\"");
  }
}

const json& require(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) fail(where, std::string("missing key \"") + key + "\"");
  return obj.at(key);
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(where, "value must be finite");
  return x;
}

double positive(const json& v, const std::string& where) {
  const double x = number(v, where);
  if (!(x > 0.0)) fail(where, "value must be positive");
  return x;
}

TrapSubspace parse_subspace(const json& sub, double mass,
                            const PhysicalConstants& constants, int index) {
  const std::string where = "trap.subspaces[" + std::to_string(index) + "]";
  if (!sub.is_object()) fail(where, "expected an object");

  const int n = [&] {
    const json& v = require(sub, where, "n");
    if (!v.is_number_integer()) fail(where + ".n", "expected an integer");
    return v.get<int>();
  }();

  const bool raw = sub.contains("s");
  const bool harmonic = sub.contains("harmonic");
  const bool box = sub.contains("box");
  if (raw + harmonic + box != 1)
    fail(where, "exactly one of {s, A_J, a_m}, {harmonic}, {box} is required");

  if (raw) {
    const json& s_val = sub.at("s");
    const bool is_inf = s_val.is_string() && s_val.get<std::string>() == "inf";
    if (is_inf) {
      reject_unknown_keys(sub, where, {"n", "s", "a_m"});
      return TrapSubspace{n, box_exponent, 1.0,
                          positive(require(sub, where, "a_m"), where + ".a_m")};
    }
    reject_unknown_keys(sub, where, {"n", "s", "A_J", "a_m"});
    return TrapSubspace{n, positive(s_val, where + ".s"),
                        positive(require(sub, where, "A_J"), where + ".A_J"),
                        positive(require(sub, where, "a_m"), where + ".a_m")};
  }

  if (harmonic) {
    reject_unknown_keys(sub, where, {"n", "harmonic"});
    const json& h = sub.at("harmonic");
    if (!h.is_object()) fail(where + ".harmonic", "expected an object");
    reject_unknown_keys(h, where + ".harmonic", {"frequency", "unit"});
    const double value =
        positive(require(h, where + ".harmonic", "frequency"), where + ".harmonic.frequency");
    const json& unit = require(h, where + ".harmonic", "unit");
    if (!unit.is_string()) fail(where + ".harmonic.unit", "expected \"rad/s\" or \"Hz\"");
    const std::string u = unit.get<std::string>();
    double omega;
    if (u == "rad/s")
      omega = value;
    else if (u == "Hz")
      omega = 2.0 * std::numbers::pi * value;
    else
      fail(where + ".harmonic.unit", "expected \"rad/s\" or \"Hz\", got \"" + u + "\"");
    return TrapSubspace{n, 2.0, 0.5 * constants.hbar * omega,
                        std::sqrt(constants.hbar / (mass * omega))};
  }

  reject_unknown_keys(sub, where, {"n", "box"});
  const json& b = sub.at("box");
  if (!b.is_object()) fail(where + ".box", "expected an object");
  reject_unknown_keys(b, where + ".box", {"volume_m3"});
  if (n != 3) fail(where, "box shorthand requires n = 3");
  const double volume = positive(require(b, where + ".box", "volume_m3"), where + ".box.volume_m3");
  return PowerLawTrap::box(volume).subspaces.front();
}

Overrides parse_overrides(const json& obj) {
  const std::string where = "overrides";
  reject_unknown_keys(obj, where,
                      {"temperature_K", "fugacity", "resolution", "epsilon_min_J",
                       "rho_m3", "quadrature"});
  Overrides out;
  if (obj.contains("temperature_K"))
    out.temperature = positive(obj.at("temperature_K"), where + ".temperature_K");
  if (obj.contains("fugacity")) {
    const double z = positive(obj.at("fugacity"), where + ".fugacity");
    if (z > 1.0) fail(where + ".fugacity", "fugacity must lie in (0, 1]");
    out.fugacity = z;
  }
  if (obj.contains("resolution"))
    out.resolution = positive(obj.at("resolution"), where + ".resolution");
  if (obj.contains("epsilon_min_J"))
    out.epsilon_min = positive(obj.at("epsilon_min_J"), where + ".epsilon_min_J");
  if (obj.contains("rho_m3")) out.rho = positive(obj.at("rho_m3"), where + ".rho_m3");
  if (obj.contains("quadrature")) {
    const json& q = obj.at("quadrature");
    if (!q.is_object()) fail(where + ".quadrature", "expected an object");
    reject_unknown_keys(q, where + ".quadrature",
                        {"rel_tol", "momentum_cutoff_factor", "radial_cutoff_factor",
                         "condensation_margin"});
    QuadratureSpec spec;
    if (q.contains("rel_tol"))
      spec.rel_tol = positive(q.at("rel_tol"), where + ".quadrature.rel_tol");
    if (q.contains("momentum_cutoff_factor"))
      spec.momentum_cutoff_factor =
          positive(q.at("momentum_cutoff_factor"), where + ".quadrature.momentum_cutoff_factor");
    if (q.contains("radial_cutoff_factor"))
      spec.radial_cutoff_factor =
          positive(q.at("radial_cutoff_factor"), where + ".quadrature.radial_cutoff_factor");
    if (q.contains("condensation_margin"))
      spec.condensation_margin =
          positive(q.at("condensation_margin"), where + ".quadrature.condensation_margin");
    try {
      spec.validate();
    } catch (const Error& e) {
      fail(where + ".quadrature", e.what());
    }
    out.quadrature = spec;
  }
  return out;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("config", "top level must be an object");
  reject_unknown_keys(doc, "config", {"species", "trap", "n_total", "overrides"});

  RunConfig out;
  const json& sp = require(doc, "config", "species");
  if (!sp.is_object()) fail("species", "expected an object");
  reject_unknown_keys(sp, "species", {"mass_kg", "xi1"});
  out.species.mass = positive(require(sp, "species", "mass_kg"), "species.mass_kg");
  out.species.xi1 = number(require(sp, "species", "xi1"), "species.xi1");

  const json& tr = require(doc, "config", "trap");
  if (!tr.is_object()) fail("trap", "expected an object");
  reject_unknown_keys(tr, "trap", {"subspaces"});
  const json& subs = require(tr, "trap", "subspaces");
  if (!subs.is_array() || subs.empty()) fail("trap.subspaces", "expected a non-empty array");
  PhysicalConstants constants;
  for (int i = 0; i < static_cast<int>(subs.size()); ++i)
    out.trap.subspaces.push_back(parse_subspace(subs[i], out.species.mass, constants, i));

  out.n_total = positive(require(doc, "config", "n_total"), "n_total");
  if (!(out.n_total >= 1.0)) fail("n_total", "must be at least 1");

  if (doc.contains("overrides")) {
    const json& ov = doc.at("overrides");
    if (!ov.is_object()) fail("overrides", "expected an object");
    out.overrides = parse_overrides(ov);
  }

  try {
    out.species.validate();
    out.trap.validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return out;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace becshift::cli
