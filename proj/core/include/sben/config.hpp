#pragma once

// Run configuration (JSON). Blocks: grid, eos, viscosity, gravitation, time,
// case, conjugate, minimizer, plus top-level seed and threads. Every
// validation failure is a ConfigError whose path names the offending field,
// e.g. "grid.nx" or "viscosity.mu".

#include <cstdint>
#include <filesystem>
#include <string>

#include "sben/minimize.hpp"
#include "sben/oracle.hpp"

namespace sben {

struct RunConfig {
  Grid2P grid;
  Eos eos;
  Viscosity visc;
  Gravitation G;
  double T = 1.0;
  int N = 10;
  int substeps = 4;
  CaseSpec case_spec;
  /// Relative solenoidal noise added to the reference path to build the
  /// default minimization start (0 = start from the reference itself).
  double noise = 0.0;
  ConjugateSolve conj;
  MinimizeOptions minimizer;
  std::uint64_t seed = 42;
  int threads = 1;

  SbenProblem problem() const { return {visc, G, conj, threads}; }
};

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::filesystem::path& file);

/// A config equivalent to the documented defaults (Taylor-Green, 32^2,
/// nu = 0.1, T = 1, N = 25); used by tests and as an example.
std::string default_config_text();

}  // namespace sben
