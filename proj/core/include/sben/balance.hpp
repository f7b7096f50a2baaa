#pragma once

// Reversible balance laws evaluated on a pair of consecutive states. Every
// interval residual is centred at the time midpoint: time derivatives are
// forward differences over the interval, everything else uses the averages
// of the two end states.

#include "sben/fields.hpp"
#include "sben/gravitation.hpp"

namespace sben {

class Eos {
 public:
  enum class Kind { incompressible, barotropic_power };

  Eos() = default;
  static Eos incompressible(double rho0);
  /// p = p0 (rho / rho0)^gamma. Throws ConfigError unless gamma >= 1, p0 > 0, rho0 > 0.
  static Eos barotropic_power(double p0, double rho0, double gamma);

  Kind kind() const { return kind_; }
  bool incompressible() const { return kind_ == Kind::incompressible; }
  double rho0() const { return rho0_; }
  double p0() const { return p0_; }
  double gamma() const { return gamma_; }

  /// Barotropic kind only; the incompressible kind throws Error.
  double pressure(double rho) const;
  double dpressure_drho(double rho) const;
  /// Specific internal energy with de/drho = p / rho^2 (zero when incompressible).
  double internal_energy(double rho) const;
  double sound_speed(double rho) const;

  ScalarField pressure(const ScalarField& rho) const;

 private:
  Kind kind_ = Kind::incompressible;
  double rho0_ = 1.0;
  double p0_ = 0.0;
  double gamma_ = 1.0;
};

struct FluidState {
  double t = 0.0;
  VectorField v;
  ScalarField rho;
  Eos eos;

  const Grid2P& grid() const { return v.grid(); }
  /// Always derived from rho; throws for the incompressible kind.
  ScalarField pressure() const { return eos.pressure(rho); }
};

/// Throws NumericalError if rho <= 0 anywhere or grids disagree.
void validate_state(const FluidState& s);

struct Momentum {
  VectorField pi;
};

/// pi = rho (v + A)
Momentum momentum(const FluidState& s, const Gravitation& G);

/// Midpoint data of an interval. Throws Error when dt <= 0.
struct IntervalMidpoint {
  double dt = 0.0;
  double t_mid = 0.0;
  VectorField v;
  ScalarField rho;
};
IntervalMidpoint midpoint(const FluidState& prev, const FluidState& next);

/// (rho_next - rho_prev) / dt + div(rho_mid v_mid)
ScalarField mass_residual(const FluidState& prev, const FluidState& next);

/// (v_next - v_prev) / dt + (v_mid . grad) v_mid
VectorField material_derivative(const FluidState& prev, const FluidState& next);

/// Average of the equation-of-state pressures of the two end states.
ScalarField interval_pressure(const FluidState& prev, const FluidState& next);

/// pi_I = rho Dv/Dt + grad p - rho (g - 2 Omega x v) at the midpoint, with
/// the barotropic pressure. Throws Error for the incompressible kind.
VectorField pi_I_residual(const FluidState& prev, const FluidState& next, const Gravitation& G);
/// Same with a caller-supplied (e.g. Lagrange multiplier) pressure field.
VectorField pi_I_residual(const FluidState& prev, const FluidState& next, const Gravitation& G,
                          const ScalarField& pressure);

/// -rho Dv/Dt + div(sigma_R) + rho (g - 2 Omega x v), sigma_R = -p I.
VectorField reduced_momentum_residual(const FluidState& prev, const FluidState& next, const Gravitation& G,
                                      const ScalarField& pressure);

/// -d(pi)/dt + div(sigma_R - v (x) pi) + rho ((grad A)^T v - grad phi)
/// with [div(v (x) pi)]_i = sum_j d_j (v_j pi_i). Requires periodic potentials.
VectorField raw_momentum_residual(const FluidState& prev, const FluidState& next, const Momentum& pi_prev,
                                  const Momentum& pi_next, const Gravitation& G, const ScalarField& pressure);
VectorField raw_momentum_residual(const FluidState& prev, const FluidState& next, const Momentum& pi_prev,
                                  const Momentum& pi_next, const Gravitation& G);

/// raw - reduced + mass_residual (v + A), which vanishes in the continuum.
/// Momenta are built as rho (v + A). The pressure cancels, so the
/// incompressible kind uses p = 0.
VectorField momentum_form_gap(const FluidState& prev, const FluidState& next, const Gravitation& G);

/// dH/dt + div(H v - sigma_R v) - rho (dphi/dt - dA/dt . v) with
/// H = |pi - rho A|^2 / (2 rho) + rho (phi + e_int).
ScalarField energy_residual(const FluidState& prev, const FluidState& next, const Momentum& pi_prev,
                            const Momentum& pi_next, const Gravitation& G, const ScalarField& pressure);
ScalarField energy_residual(const FluidState& prev, const FluidState& next, const Momentum& pi_prev,
                            const Momentum& pi_next, const Gravitation& G);

}  // namespace sben
