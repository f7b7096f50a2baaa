#pragma once

// Classical reference solutions: analytic Taylor-Green and explicit Heun
// (RK2) steppers built on the same discrete operators as the functional.

#include <cstdint>
#include <string>

#include "sben/functional.hpp"

namespace sben {

struct AnalyticState {
  FluidState state;
  ScalarField pressure;
};

/// v = A (sin x cos y, -cos x sin y, 0) e^{-2 nu t},
/// p = rho0 A^2 (cos 2x + cos 2y) / 4 e^{-4 nu t}. Requires the (2 pi)^2 box.
AnalyticState taylor_green_analytic(double t, double nu, const Grid2P& grid, double amplitude = 1.0,
                                    double rho0 = 1.0);

/// Largest stable explicit step for the state (diffusive and advective /
/// acoustic limits with a safety factor).
double stable_dt(const FluidState& s, const Viscosity& visc);

/// One Heun step of v_t = P[-(v . grad) v - K(v) / rho0 + g - 2 Omega x v]
/// with P the Leray projection; the result is projected again. Throws
/// NumericalError with the suggested step when dt exceeds stable_dt.
FluidState step_incompressible(const FluidState& s, double dt, const Viscosity& visc, const Gravitation& G);

/// One Heun step of rho_t = -div(rho v),
/// (rho v)_t = -rho (v . grad) v - grad p - K(v) + rho (g - 2 Omega x v)
/// in velocity form, mass in divergence form.
FluidState step_compressible(const FluidState& s, double dt, const Viscosity& visc, const Gravitation& G);

struct CaseSpec {
  std::string id = "taylor_green";
  double amplitude = 1.0;
  /// Uniform drift added to the taylor_green / rigid_rotation start.
  double drift_x = 0.0;
  double drift_y = 0.0;
};

/// Initial state of a named case: taylor_green, shear_decay, rigid_rotation
/// (the Taylor-Green start, meant for the rigid_rotation gravitation) and
/// compressible_smooth (rho = rho0 (1 + A cos x cos y) with a smooth
/// compressive velocity of amplitude A). Throws ConfigError for unknown ids
/// or an eos that does not fit the case.
FluidState case_initial_state(const CaseSpec& c, const Grid2P& grid, const Eos& eos);

/// Oracle path on t_k = k T / N, integrating each interval with at least
/// `substeps` explicit steps (more if stability requires).
Path reference_path(const FluidState& initial, double T, int N, int substeps, const Viscosity& visc,
                    const Gravitation& G);

/// Solenoidal perturbation: the discrete curl of a random low-mode stream
/// function, scaled per slice to `fraction` of that slice's L2 norm.
/// Slices 1..N are perturbed; v_0 is left alone.
void add_solenoidal_noise(Path& path, double fraction, std::uint64_t seed);

}  // namespace sben
