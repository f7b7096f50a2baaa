#pragma once

// CSV hand-off format: one file per field, header `i,j,c0[,c1,...]`, one row
// per cell in row-major order (i fastest). Grid metadata travels in a JSON
// sidecar {nx, ny, lx, ly}. Values are written with round-trip precision so
// identical inputs give byte-identical files.

#include <filesystem>

#include "sben/fields.hpp"

namespace sben {

template <std::size_t N>
void write_field_csv(const std::filesystem::path& file, const Field<N>& field);

/// Throws Error on malformed input or when the row count does not match grid.
template <std::size_t N>
Field<N> read_field_csv(const std::filesystem::path& file, const Grid2P& grid);

void write_grid_sidecar(const std::filesystem::path& file, const Grid2P& grid);
Grid2P read_grid_sidecar(const std::filesystem::path& file);

}  // namespace sben
