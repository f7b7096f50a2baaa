#include "sben/archive.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "sben/field_io.hpp"

namespace sben {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string slice_name(const char* prefix, std::size_t k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s_%04zu.csv", prefix, k);
  return buf;
}

ordered_json eos_json(const Eos& eos) {
  ordered_json j;
  if (eos.incompressible()) {
    j["kind"] = "incompressible";
    j["rho0"] = eos.rho0();
  } else {
    j["kind"] = "barotropic_power";
    j["p0"] = eos.p0();
    j["rho0"] = eos.rho0();
    j["gamma"] = eos.gamma();
  }
  return j;
}

Eos eos_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "incompressible") return Eos::incompressible(j.at("rho0").get<double>());
  if (kind == "barotropic_power") {
    return Eos::barotropic_power(j.at("p0").get<double>(), j.at("rho0").get<double>(), j.at("gamma").get<double>());
  }
  throw Error("archive manifest has unknown eos kind '" + kind + "'");
}

}  // namespace

void write_path_archive(const fs::path& dir, const Path& path) {
  validate_path(path);
  fs::create_directories(dir);
  ordered_json manifest;
  manifest["format"] = "sben-path";
  manifest["version"] = 1;
  manifest["intervals"] = path.intervals();
  manifest["t0"] = path.states.front().t;
  manifest["dt"] = path.dt();
  manifest["eos"] = eos_json(path.eos());
  manifest["has_pressure"] = !path.pressure.empty();
  ordered_json times = ordered_json::array();
  for (const FluidState& s : path.states) times.push_back(s.t);
  manifest["times"] = times;
  {
    std::ofstream out(dir / "manifest.json");
    if (!out) throw Error("cannot write " + (dir / "manifest.json").string());
    out << manifest.dump(2) << "\n";
  }
  write_grid_sidecar(dir / "grid.json", path.grid());
  for (std::size_t k = 0; k < path.states.size(); ++k) {
    write_field_csv(dir / slice_name("v", k), path.states[k].v);
    write_field_csv(dir / slice_name("rho", k), path.states[k].rho);
  }
  for (std::size_t k = 0; k < path.pressure.size(); ++k) write_field_csv(dir / slice_name("p", k), path.pressure[k]);
}

Path read_path_archive(const fs::path& dir, const Grid2P* expected) {
  std::ifstream in(dir / "manifest.json");
  if (!in) throw Error("no path archive at " + dir.string() + " (manifest.json missing)");
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed archive manifest: " + std::string(e.what()));
  }
  const Grid2P grid = read_grid_sidecar(dir / "grid.json");
  if (expected && !(*expected == grid)) {
    throw IncompatibleFields("archive grid " + std::to_string(grid.nx) + "x" + std::to_string(grid.ny) +
                             " does not match the configured grid " + std::to_string(expected->nx) + "x" +
                             std::to_string(expected->ny));
  }
  Path path;
  try {
    if (manifest.at("format").get<std::string>() != "sben-path") throw Error("archive format is not sben-path");
    const Eos eos = eos_from_json(manifest.at("eos"));
    const auto& times = manifest.at("times");
    for (std::size_t k = 0; k < times.size(); ++k) {
      FluidState s;
      s.t = times[k].get<double>();
      s.eos = eos;
      s.v = read_field_csv<3>(dir / slice_name("v", k), grid);
      s.rho = read_field_csv<1>(dir / slice_name("rho", k), grid);
      path.states.push_back(std::move(s));
    }
    if (manifest.at("has_pressure").get<bool>()) {
      for (std::size_t k = 0; k + 1 < path.states.size(); ++k) {
        path.pressure.push_back(read_field_csv<1>(dir / slice_name("p", k), grid));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed archive manifest: " + std::string(e.what()));
  }
  validate_path(path);
  return path;
}

std::string report_json(const SbenReport& r) {
  ordered_json j;
  j["functional"] = r.incompressible ? "incompressible" : "compressible";
  j["pi"] = r.pi;
  j["phi_integral"] = r.phi_integral;
  j["relative_pi"] = r.phi_integral > 0.0 ? r.pi / r.phi_integral : 0.0;
  j["max_divergence"] = r.max_divergence;
  if (!r.status.empty()) {
    j["status"] = r.status;
    j["iterations"] = r.iterations;
    j["wall_seconds"] = r.wall_seconds;
    j["pi_history"] = r.pi_history;
    j["grad_norm_history"] = r.grad_norm_history;
    if (!r.pi_history.empty() && r.pi > 0.0) j["pi_reduction"] = r.pi_history.front() / r.pi;
  }
  ordered_json rows = ordered_json::array();
  for (const IntervalTerms& t : r.intervals) {
    ordered_json row;
    row["t_mid"] = t.t_mid;
    row["phi"] = t.phi;
    row["phi_star"] = t.phi_star;
    row["pairing"] = t.pairing;
    row["gap"] = t.gap;
    row["excluded_pairing"] = t.excluded_pairing;
    row["dropped"] = t.dropped;
    row["ns_residual_max"] = t.ns_residual_max;
    row["ns_residual_l2"] = t.ns_residual_l2;
    row["mass_residual_max"] = t.mass_residual_max;
    row["cg_iterations"] = t.cg_iterations;
    rows.push_back(row);
  }
  j["intervals"] = rows;
  return j.dump(2);
}

void write_report(const fs::path& file, const SbenReport& report) {
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
  std::ofstream out(file);
  if (!out) throw Error("cannot write " + file.string());
  out << report_json(report) << "\n";
}

}  // namespace sben
