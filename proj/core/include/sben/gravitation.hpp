#pragma once

// Galilean gravitation given by a scalar potential phi(t, x) and a vector
// potential A(t, x). Gravity g = -grad(phi) - dA/dt and the Coriolis vector
// Omega = curl(A) / 2 are always rebuilt from the potentials.
//
// Potentials are analytic presets. Spatial derivatives are central
// differences of the analytic functions evaluated at the neighbouring cell
// centres without periodic wrap, so non-periodic presets (uniform gravity,
// rigid rotation) are differentiated consistently; time derivatives are
// analytic.

#include <map>
#include <string>
#include <string_view>

#include "sben/fields.hpp"

namespace sben {

class Gravitation {
 public:
  enum class Preset { zero, uniform_gravity, rigid_rotation, periodic_potentials };

  struct Params {
    double g0 = 0.0;         // uniform_gravity: phi = g0 * y
    double omega = 0.0;      // rigid_rotation: A = (0, 0, omega) x r
    double phi_amp = 0.0;    // periodic_potentials
    double a_amp = 0.0;
    double frequency = 0.0;
  };

  Gravitation() = default;

  static Gravitation zero();
  static Gravitation uniform_gravity(double g0);
  static Gravitation rigid_rotation(double omega);
  /// phi = phi_amp cos(kx x) cos(ky y) cos(f t),
  /// A = a_amp (sin(ky y), sin(kx x), 0) (1 + sin(f t) / 2), with the box
  /// fundamental wavenumbers kx = 2 pi / lx, ky = 2 pi / ly.
  static Gravitation periodic_potentials(double phi_amp, double a_amp, double frequency);

  /// Throws ConfigError("gravitation.preset", ...) for unknown ids and
  /// ConfigError("gravitation.parameters.<name>", ...) for unknown parameters.
  static Gravitation from_preset(std::string_view id, const std::map<std::string, double>& params);

  Preset preset() const { return preset_; }
  std::string_view preset_id() const;
  const Params& params() const { return params_; }
  /// True when phi and A are periodic on any box (required by operations that
  /// difference products of the potentials with periodic stencils).
  bool periodic() const;
  bool is_zero() const { return preset_ == Preset::zero; }

  // Pointwise analytic values. lx/ly are needed by the periodic preset.
  double phi(double t, double x, double y, const Grid2P& g) const;
  double dphi_dt(double t, double x, double y, const Grid2P& g) const;
  std::array<double, 3> vector_potential(double t, double x, double y, const Grid2P& g) const;
  std::array<double, 3> dA_dt(double t, double x, double y, const Grid2P& g) const;
  /// Analytic Omega, for verification of the differenced one.
  std::array<double, 3> omega_exact(double t, double x, double y, const Grid2P& g) const;
  std::array<double, 3> gravity_exact(double t, double x, double y, const Grid2P& g) const;

  ScalarField sample_phi(const Grid2P& g, double t) const;
  ScalarField sample_dphi_dt(const Grid2P& g, double t) const;
  VectorField sample_A(const Grid2P& g, double t) const;
  VectorField sample_dA_dt(const Grid2P& g, double t) const;
  VectorField grad_phi(const Grid2P& g, double t) const;
  /// Component 3*a + b holds dA_a / dx_b.
  TensorField grad_A(const Grid2P& g, double t) const;

 private:
  Gravitation(Preset p, Params params) : preset_(p), params_(params) {}

  Preset preset_ = Preset::zero;
  Params params_;
};

VectorField eval_gravity(const Gravitation& G, const Grid2P& grid, double t);
VectorField eval_coriolis_vector(const Gravitation& G, const Grid2P& grid, double t);
/// rho (g - 2 Omega x v)
VectorField gravitation_force(const ScalarField& rho, const VectorField& v, const Gravitation& G, double t);

}  // namespace sben
