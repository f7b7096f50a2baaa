#pragma once

// Canonical symplectic form on phase points zeta = (v, d(pi)/dt) and the
// reversible / irreversible split of the fluid phase velocity.

#include <optional>

#include "sben/balance.hpp"
#include "sben/dissipation.hpp"

namespace sben {

struct PhasePoint {
  VectorField v;
  VectorField pidot;
};

struct PhaseDecomposition {
  VectorField v_I;
  VectorField pi_I;
};

/// int (v . pidot' - pidot . v')
double omega(const PhasePoint& z, const PhasePoint& zp);

/// zeta_I = zeta - X_H on an interval: v_I = v - pi / rho + A and pi_I the
/// barotropic momentum residual, all at the midpoint. The pressure overload
/// serves the incompressible kind.
PhaseDecomposition decompose(const FluidState& prev, const FluidState& next, const Momentum& pi_prev,
                             const Momentum& pi_next, const Gravitation& G);
PhaseDecomposition decompose(const FluidState& prev, const FluidState& next, const Momentum& pi_prev,
                             const Momentum& pi_next, const Gravitation& G, const ScalarField& pressure);

struct PolarValue {
  /// Empty when v_I exceeds the tolerance (the polar is +infinity).
  std::optional<double> value;
  double v_I_max = 0.0;
  /// L2 norm of the kernel content of -pi_I dropped before conjugation.
  double discarded = 0.0;
};

/// phi*(-pi_I) when ||v_I||_inf <= v_tol * v_scale, +infinity otherwise.
PolarValue symplectic_polar(const PhaseDecomposition& zI, const Viscosity& visc, const ConjugateSolve& cfg,
                            double v_tol = 1e-8, double v_scale = 1.0);

/// phi(v) + Phi*_omega(zeta_I) - omega(zeta_I, zeta). Empty when the polar is
/// infinite.
std::optional<double> constitutive_gap(const PhasePoint& z, const PhaseDecomposition& zI, const Viscosity& visc,
                                       const ConjugateSolve& cfg, double v_tol = 1e-8);

}  // namespace sben
