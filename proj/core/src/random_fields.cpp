#include "sben/random_fields.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace sben {

namespace {

struct Mode {
  int m, n;
  double a, theta;
};

std::vector<Mode> draw_modes(Rng& rng, int max_mode) {
  std::normal_distribution<double> amp(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::vector<Mode> modes;
  for (int m = -max_mode; m <= max_mode; ++m) {
    for (int n = 0; n <= max_mode; ++n) {
      if (n == 0 && m < 0) continue;
      const double a = amp(rng);
      modes.push_back({m, n, a, phase(rng)});
    }
  }
  return modes;
}

double eval_modes(const std::vector<Mode>& modes, double kx, double ky, double x, double y) {
  double s = 0.0;
  for (const Mode& md : modes) s += md.a * std::cos(md.m * kx * x + md.n * ky * y + md.theta);
  return s;
}

}  // namespace

ScalarField random_smooth_scalar(const Grid2P& grid, Rng& rng, int max_mode) {
  const auto modes = draw_modes(rng, max_mode);
  const double kx = 2.0 * std::numbers::pi / grid.lx;
  const double ky = 2.0 * std::numbers::pi / grid.ly;
  return ScalarField::sample(grid, [&](double x, double y) {
    return std::array<double, 1>{eval_modes(modes, kx, ky, x, y)};
  });
}

VectorField random_smooth_vector(const Grid2P& grid, Rng& rng, int max_mode) {
  VectorField v(grid);
  for (std::size_t c = 0; c < 3; ++c) {
    const ScalarField s = random_smooth_scalar(grid, rng, max_mode);
    for (std::size_t k = 0; k < grid.cells(); ++k) v.at(c, k) = s.at(0, k);
  }
  return v;
}

VectorField random_solenoidal(const Grid2P& grid, Rng& rng, int max_mode) {
  const ScalarField psi = random_smooth_scalar(grid, rng, max_mode);
  VectorField stream(grid);
  for (std::size_t k = 0; k < grid.cells(); ++k) stream.at(2, k) = psi.at(0, k);
  return curl(stream);
}

SymTensorField random_sym_tensor(const Grid2P& grid, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  SymTensorField t(grid);
  for (double& x : t.values()) x = nd(rng);
  return t;
}

}  // namespace sben
