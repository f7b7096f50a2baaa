#include "sben/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace sben {

namespace {

using json = nlohmann::json;

class Block {
 public:
  Block(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_, "must be an object");
  }

  void allow(std::initializer_list<const char*> keys) const {
    for (const auto& [key, value] : j_.items()) {
      bool known = false;
      for (const char* k : keys) known = known || key == k;
      if (!known) throw ConfigError(at(key), "unknown field");
    }
  }

  bool has(const char* key) const { return j_.contains(key); }

  double number(const char* key) const {
    const json& v = require(key);
    if (!v.is_number()) throw ConfigError(at(key), "must be a number");
    return v.get<double>();
  }
  double number(const char* key, double fallback) const { return has(key) ? number(key) : fallback; }

  long long integer(const char* key) const {
    const json& v = require(key);
    if (!v.is_number_integer()) throw ConfigError(at(key), "must be an integer");
    return v.get<long long>();
  }
  long long integer(const char* key, long long fallback) const { return has(key) ? integer(key) : fallback; }

  std::string text(const char* key) const {
    const json& v = require(key);
    if (!v.is_string()) throw ConfigError(at(key), "must be a string");
    return v.get<std::string>();
  }

  Block child(const char* key) const { return Block(require(key), at(key)); }
  const json& raw(const char* key) const { return require(key); }
  std::string at(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

 private:
  const json& require(const char* key) const {
    if (!j_.contains(key)) throw ConfigError(at(key), "missing");
    return j_.at(key);
  }

  const json& j_;
  std::string path_;
};

int positive_int(const Block& b, const char* key, long long value, long long min) {
  if (value < min || value > 1'000'000'000) {
    throw ConfigError(b.at(key), "must be an integer >= " + std::to_string(min));
  }
  return static_cast<int>(value);
}

double positive(const Block& b, const char* key, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) throw ConfigError(b.at(key), "must be positive");
  return value;
}

Grid2P parse_grid(const Block& b) {
  b.allow({"nx", "ny", "lx", "ly"});
  const int nx = positive_int(b, "nx", b.integer("nx"), 4);
  const int ny = positive_int(b, "ny", b.integer("ny"), 4);
  const double lx = positive(b, "lx", b.number("lx", 2.0 * std::numbers::pi));
  const double ly = positive(b, "ly", b.number("ly", 2.0 * std::numbers::pi));
  return Grid2P(nx, ny, lx, ly);
}

Eos parse_eos(const Block& b) {
  const std::string kind = b.text("kind");
  if (kind == "incompressible") {
    b.allow({"kind", "rho0"});
    return Eos::incompressible(positive(b, "rho0", b.number("rho0", 1.0)));
  }
  if (kind == "barotropic_power") {
    b.allow({"kind", "p0", "rho0", "gamma"});
    const double p0 = positive(b, "p0", b.number("p0"));
    const double rho0 = positive(b, "rho0", b.number("rho0", 1.0));
    const double gamma = b.number("gamma");
    if (!(gamma >= 1.0)) throw ConfigError(b.at("gamma"), "must be >= 1");
    return Eos::barotropic_power(p0, rho0, gamma);
  }
  throw ConfigError(b.at("kind"), "unknown eos kind '" + kind + "'");
}

Gravitation parse_gravitation(const Block& b) {
  b.allow({"preset", "parameters"});
  std::map<std::string, double> params;
  if (b.has("parameters")) {
    const json& p = b.raw("parameters");
    if (!p.is_object()) throw ConfigError(b.at("parameters"), "must be an object");
    for (const auto& [key, value] : p.items()) {
      if (!value.is_number()) throw ConfigError(b.at("parameters") + "." + key, "must be a number");
      params[key] = value.get<double>();
    }
  }
  return Gravitation::from_preset(b.text("preset"), params);
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed configuration: ") + e.what());
  }
  const Block top(root, "");
  top.allow({"grid", "eos", "viscosity", "gravitation", "time", "case", "conjugate", "minimizer", "seed", "threads"});

  RunConfig cfg;
  cfg.grid = parse_grid(top.child("grid"));
  cfg.eos = parse_eos(top.child("eos"));

  const Block visc = top.child("viscosity");
  visc.allow({"mu"});
  const double mu = visc.number("mu");
  if (!(mu > 0.0)) throw ConfigError("viscosity.mu", "must be positive");
  cfg.visc = Viscosity(mu);

  cfg.G = top.has("gravitation") ? parse_gravitation(top.child("gravitation")) : Gravitation::zero();

  const Block time = top.child("time");
  time.allow({"T", "N", "substeps"});
  cfg.T = positive(time, "T", time.number("T"));
  cfg.N = positive_int(time, "N", time.integer("N"), 1);
  cfg.substeps = positive_int(time, "substeps", time.integer("substeps", 4), 1);

  const Block cs = top.child("case");
  cs.allow({"id", "amplitude", "nu", "drift", "noise"});
  cfg.case_spec.id = cs.text("id");
  if (cfg.case_spec.id != "taylor_green" && cfg.case_spec.id != "shear_decay" &&
      cfg.case_spec.id != "rigid_rotation" && cfg.case_spec.id != "compressible_smooth") {
    throw ConfigError("case.id", "unknown case '" + cfg.case_spec.id + "'");
  }
  cfg.case_spec.amplitude = cs.number("amplitude", cfg.case_spec.id == "compressible_smooth" ? 0.01 : 1.0);
  if (cs.has("nu")) {
    const double nu = cs.number("nu");
    const double expected = mu / cfg.eos.rho0();
    if (std::abs(nu - expected) > 1e-12 * expected) {
      throw ConfigError("case.nu", "must equal viscosity.mu / eos.rho0 = " + std::to_string(expected));
    }
  }
  if (cs.has("drift")) {
    const json& d = cs.raw("drift");
    if (!d.is_array() || d.size() != 2 || !d[0].is_number() || !d[1].is_number()) {
      throw ConfigError("case.drift", "must be a pair of numbers");
    }
    cfg.case_spec.drift_x = d[0].get<double>();
    cfg.case_spec.drift_y = d[1].get<double>();
  }
  cfg.noise = cs.number("noise", 0.0);
  if (cfg.noise < 0.0) throw ConfigError("case.noise", "must be >= 0");

  if (top.has("conjugate")) {
    const Block c = top.child("conjugate");
    c.allow({"tol", "max_iter"});
    cfg.conj.tol = positive(c, "tol", c.number("tol", cfg.conj.tol));
    cfg.conj.max_iter = positive_int(c, "max_iter", c.integer("max_iter", cfg.conj.max_iter), 1);
  }

  if (top.has("minimizer")) {
    const Block m = top.child("minimizer");
    m.allow({"max_iter", "tol_pi", "tol_grad", "restart", "armijo_c", "shrink"});
    MinimizeOptions& o = cfg.minimizer;
    o.max_iter = positive_int(m, "max_iter", m.integer("max_iter", o.max_iter), 0);
    o.tol_pi_rel = positive(m, "tol_pi", m.number("tol_pi", o.tol_pi_rel));
    o.tol_grad_rel = positive(m, "tol_grad", m.number("tol_grad", o.tol_grad_rel));
    o.restart_every = positive_int(m, "restart", m.integer("restart", o.restart_every), 1);
    o.armijo_c = m.number("armijo_c", o.armijo_c);
    if (!(o.armijo_c > 0.0 && o.armijo_c < 1.0)) throw ConfigError("minimizer.armijo_c", "must lie in (0, 1)");
    o.shrink = m.number("shrink", o.shrink);
    if (!(o.shrink > 0.0 && o.shrink < 1.0)) throw ConfigError("minimizer.shrink", "must lie in (0, 1)");
  }

  if (top.has("seed")) {
    const json& s = top.raw("seed");
    if (!s.is_number_unsigned()) throw ConfigError("seed", "must be a non-negative integer");
    cfg.seed = s.get<std::uint64_t>();
  }
  cfg.threads = static_cast<int>(top.integer("threads", 1));
  if (cfg.threads < 0) throw ConfigError("threads", "must be >= 0");
  return cfg;
}

RunConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("", "cannot open configuration " + file.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string default_config_text() {
  return R"({
  "grid": {"nx": 32, "ny": 32},
  "eos": {"kind": "incompressible", "rho0": 1.0},
  "viscosity": {"mu": 0.1},
  "gravitation": {"preset": "zero"},
  "time": {"T": 1.0, "N": 25, "substeps": 4},
  "case": {"id": "taylor_green", "amplitude": 1.0},
  "conjugate": {"tol": 1e-10, "max_iter": 5000},
  "seed": 42
}
)";
}

}  // namespace sben
