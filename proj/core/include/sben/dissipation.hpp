#pragma once

// Quadratic viscous dissipation under the Stokes hypothesis:
//   W(D) = mu [Tr(D^2) - Tr(D)^2 / 3],  sigma_I = dW/dD = 2 mu dev(D),
//   phi(v) = int W(sym_grad v),          K(v) = -div sigma_I(sym_grad v).
// With the adjoint stencils of fields.hpp, <K u, u> = 2 phi(u) holds exactly.
//
// K is singular on the torus. Its kernel is the kernel of the central
// gradient (constants and odd-even checkerboards, per component), so
// "mean-free" below means free of all of those modes.

#include "sben/fields.hpp"

namespace sben {

struct Viscosity {
  double mu = 1.0;

  Viscosity() = default;
  /// Throws ConfigError("viscosity.mu", ...) unless mu > 0.
  explicit Viscosity(double mu);
};

struct ConjugateSolve {
  double tol = 1e-10;
  int max_iter = 5000;
  /// Relative kernel content of a right-hand side above which it is
  /// rejected as outside the range of K.
  double range_tol = 1e-8;
};

ScalarField w_density(const SymTensorField& D, double mu);
SymTensorField sigma_I(const SymTensorField& D, double mu);
double phi(const VectorField& v, const Viscosity& visc);
VectorField apply_K(const VectorField& v, const Viscosity& visc);

/// Minimal-norm solution of K v = f. Throws NumericalError when f has kernel
/// content (f outside range of K) or CG fails to reach cfg.tol.
VectorField solve_K(const VectorField& f, const Viscosity& visc, const ConjugateSolve& cfg);

struct ConjugateValue {
  /// phi*(f), evaluated as <f, u> - phi(u) at u = K^-1 f.
  double value = 0.0;
  /// The two closed forms phi(u) and <f, u> / 2.
  double phi_of_solution = 0.0;
  double half_pairing = 0.0;
  VectorField solution;
  int iterations = 0;
  double relative_residual = 0.0;
};

ConjugateValue phi_star_detail(const VectorField& f, const Viscosity& visc, const ConjugateSolve& cfg);
double phi_star(const VectorField& f, const Viscosity& visc, const ConjugateSolve& cfg);

/// phi(v) + phi*(f) - <f, v>. Assembled as (1/2)<K d, d> + <f - K u, d>
/// with d = u - v, which is the same quantity free of cancellation.
double fenchel_gap(const VectorField& v, const VectorField& f, const Viscosity& visc, const ConjugateSolve& cfg);

}  // namespace sben
