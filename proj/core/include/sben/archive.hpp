#pragma once

// Path archives: a directory holding manifest.json, grid.json and one CSV
// per slice and field (v_0000.csv, rho_0000.csv, and p_0000.csv for the
// interval pressures when present). Reports are written as JSON.

#include <filesystem>
#include <string>

#include "sben/functional.hpp"

namespace sben {

void write_path_archive(const std::filesystem::path& dir, const Path& path);

/// Throws Error for missing or inconsistent files, IncompatibleFields when
/// `expected` is given and differs from the archived grid.
Path read_path_archive(const std::filesystem::path& dir, const Grid2P* expected = nullptr);

std::string report_json(const SbenReport& report);
void write_report(const std::filesystem::path& file, const SbenReport& report);

}  // namespace sben
