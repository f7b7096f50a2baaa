#pragma once

// Command implementations behind the `sben` executable, kept in a library so
// tests can drive them without spawning processes.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sben/config.hpp"

namespace sben::cli {

enum ExitCode : int { ok = 0, config_error = 2, numerical_failure = 3, invariant_failure = 4 };

struct CheckItem {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
};

/// The invariant suite run by `sben check`, on the configured grid (with
/// one refinement for order checks) and seeded draws.
std::vector<CheckItem> run_check_suite(const RunConfig& cfg);

int cmd_check(const RunConfig& cfg, const std::optional<std::filesystem::path>& out, std::ostream& log);
int cmd_reference(const RunConfig& cfg, const std::filesystem::path& out, std::ostream& log);
int cmd_evaluate(const RunConfig& cfg, const std::filesystem::path& archive,
                 const std::optional<std::filesystem::path>& out, std::ostream& log);
int cmd_minimize(const RunConfig& cfg, const std::optional<std::filesystem::path>& warm_start,
                 const std::filesystem::path& out, std::ostream& log);

/// Reference path for the configured case. Rejects gravitation presets that
/// are not usable on the periodic box (uniform_gravity).
Path build_reference(const RunConfig& cfg);

/// Parses arguments and dispatches; exceptions are mapped to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sben::cli
