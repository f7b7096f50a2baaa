#pragma once

// Seeded smooth random fields for property checks: finite sums of low
// Fourier modes with normally distributed amplitudes.

#include <random>

#include "sben/fields.hpp"

namespace sben {

using Rng = std::mt19937_64;

/// Sum of modes with |m|, |n| <= max_mode on the box, per component.
ScalarField random_smooth_scalar(const Grid2P& grid, Rng& rng, int max_mode = 3);
VectorField random_smooth_vector(const Grid2P& grid, Rng& rng, int max_mode = 3);
/// Discrete curl of a random stream function (exactly divergence-free).
VectorField random_solenoidal(const Grid2P& grid, Rng& rng, int max_mode = 3);
SymTensorField random_sym_tensor(const Grid2P& grid, Rng& rng);

}  // namespace sben
