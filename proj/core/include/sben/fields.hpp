#pragma once

// Periodic planar grids and the discrete calculus used by every other module.
//
// Fields live on a doubly periodic nx x ny box and carry the full set of 3-D
// components; nothing depends on the third coordinate (d/dz == 0). All
// derivatives are second-order central differences with periodic wrap, and
// integrals are the periodic midpoint sum. With this pairing the discrete
// gradient is exactly minus the adjoint of the discrete divergence.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "sben/error.hpp"

namespace sben {

struct Grid2P {
  int nx = 0;
  int ny = 0;
  double lx = 0.0;
  double ly = 0.0;

  Grid2P() = default;
  /// Throws ConfigError unless nx, ny >= 4 and lx, ly > 0.
  Grid2P(int nx, int ny, double lx, double ly);

  double dx() const { return lx / nx; }
  double dy() const { return ly / ny; }
  double cell_area() const { return dx() * dy(); }
  std::size_t cells() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }

  /// Cell-centre coordinates.
  double x(int i) const { return (i + 0.5) * dx(); }
  double y(int j) const { return (j + 0.5) * dy(); }

  /// Row-major cell index: i runs fastest.
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(i);
  }

  bool operator==(const Grid2P&) const = default;
};

/// Component-major storage of N scalar samples per cell.
template <std::size_t N>
class Field {
 public:
  static constexpr std::size_t kComponents = N;

  Field() = default;
  explicit Field(const Grid2P& grid, double fill = 0.0) : grid_(grid), data_(N * grid.cells(), fill) {}

  const Grid2P& grid() const { return grid_; }
  std::size_t cells() const { return grid_.cells(); }

  std::span<double> component(std::size_t c) { return {data_.data() + c * cells(), cells()}; }
  std::span<const double> component(std::size_t c) const { return {data_.data() + c * cells(), cells()}; }

  double& at(std::size_t c, std::size_t cell) { return data_[c * cells() + cell]; }
  double at(std::size_t c, std::size_t cell) const { return data_[c * cells() + cell]; }
  double& at(std::size_t c, int i, int j) { return at(c, grid_.index(i, j)); }
  double at(std::size_t c, int i, int j) const { return at(c, grid_.index(i, j)); }

  std::span<double> values() { return data_; }
  std::span<const double> values() const { return data_; }

  /// Samples fn(x, y) -> std::array<double, N> at every cell centre.
  template <class Fn>
  static Field sample(const Grid2P& grid, Fn&& fn) {
    Field out(grid);
    for (int j = 0; j < grid.ny; ++j) {
      for (int i = 0; i < grid.nx; ++i) {
        const std::array<double, N> value = fn(grid.x(i), grid.y(j));
        for (std::size_t c = 0; c < N; ++c) out.at(c, i, j) = value[c];
      }
    }
    return out;
  }

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(double a);
  /// this += a * x
  Field& axpy(double a, const Field& x);

  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }
  friend Field operator*(double a, Field f) { return f *= a; }
  friend Field operator*(Field f, double a) { return f *= a; }
  friend Field operator-(Field f) { return f *= -1.0; }

 private:
  Grid2P grid_;
  std::vector<double> data_;
};

using ScalarField = Field<1>;
using VectorField = Field<3>;
/// Components xx, yy, zz, xy, xz, yz.
using SymTensorField = Field<6>;
/// Full gradient of a vector field: component 3*a + b holds d v_a / d x_b.
using TensorField = Field<9>;

namespace sym {
inline constexpr std::size_t xx = 0, yy = 1, zz = 2, xy = 3, xz = 4, yz = 5;
}

/// Throws IncompatibleFields when the grids differ.
void require_same_grid(const Grid2P& a, const Grid2P& b);

// Differential operators.
VectorField grad_scalar(const ScalarField& s);
TensorField grad_vector(const VectorField& v);
ScalarField div_vector(const VectorField& v);
VectorField div_tensor(const SymTensorField& t);
VectorField curl(const VectorField& v);
/// Wide-stencil Laplacian, div(grad(.)) componentwise.
VectorField laplacian(const VectorField& v);
ScalarField laplacian(const ScalarField& s);
SymTensorField sym_grad(const VectorField& v);

// Quadrature.
double integrate(const ScalarField& s);
template <std::size_t N>
double inner(const Field<N>& a, const Field<N>& b);
template <std::size_t N>
double norm_l2(const Field<N>& a);
template <std::size_t N>
double norm_max(const Field<N>& a);

// Pointwise algebra.
ScalarField dot(const VectorField& a, const VectorField& b);
VectorField cross(const VectorField& a, const VectorField& b);
VectorField scale(const ScalarField& s, const VectorField& v);
ScalarField multiply(const ScalarField& a, const ScalarField& b);
ScalarField trace(const SymTensorField& t);
/// (a . grad) b with the central-difference gradient.
VectorField advect(const VectorField& a, const VectorField& b);
/// Per-component cell mean.
template <std::size_t N>
std::array<double, N> mean(const Field<N>& f);

/// Number of grid-scale modes annihilated by the central-difference
/// gradient: constants plus the odd-even checkerboards along each even axis.
int null_mode_count(const Grid2P& grid);

/// Removes, per component, the projection onto the kernel of the central
/// gradient (mean plus checkerboards). Returns the L2 norm of what was removed.
template <std::size_t N>
double remove_null_modes(Field<N>& f);

/// L2 norm of the kernel content of f, without modifying it.
template <std::size_t N>
double null_mode_norm(const Field<N>& f);

}  // namespace sben
