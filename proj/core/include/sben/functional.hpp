#pragma once

// Discrete space-time functional
//   Pi = sum_k dt [ phi(v_mid) + phi*(P f_k) + <rho (Dv/Dt - g) + grad p, v_mid> ]
// with f_k = -rho Dv/Dt - grad p + rho (g - 2 Omega x v) on each interval,
// all quantities at the interval midpoint. P drops the kernel of K and, for
// the incompressible kind, also applies the Leray projection (no pressure
// enters f then). Each interval term is a Fenchel gap, so Pi >= 0, and
// Pi = 0 exactly when every interval satisfies K v_mid = P f_k.

#include <string>
#include <vector>

#include "sben/gravitation.hpp"
#include "sben/path.hpp"

namespace sben {

struct SbenProblem {
  Viscosity visc;
  Gravitation G;
  ConjugateSolve conj;
  /// Worker threads for per-interval work (0 = hardware concurrency).
  int threads = 1;
};

struct IntervalTerms {
  double t_mid = 0.0;
  double phi = 0.0;
  double phi_star = 0.0;
  /// -<P f, v_mid>; equals the head-loss pairing <rho (Dv/Dt - g) + grad p, v_mid>
  /// minus excluded_pairing.
  double pairing = 0.0;
  /// Pairing of the part of f removed by P (pressure gradients and kernel
  /// modes) with v_mid. Not part of Pi; vanishes for divergence-free v_mid
  /// whose mean momentum balance holds.
  double excluded_pairing = 0.0;
  /// Assembled without cancellation; phi + phi_star + pairing up to round-off.
  double gap = 0.0;
  /// Norm of the kernel content of f removed before conjugation.
  double dropped = 0.0;
  /// Navier-Stokes residual K v_mid - P f (max and L2 norms).
  double ns_residual_max = 0.0;
  double ns_residual_l2 = 0.0;
  double mass_residual_max = 0.0;
  int cg_iterations = 0;
};

struct SbenReport {
  bool incompressible = true;
  std::vector<IntervalTerms> intervals;
  double pi = 0.0;
  /// sum_k dt phi(v_mid), the scale against which Pi is judged.
  double phi_integral = 0.0;
  double max_divergence = 0.0;
  /// Lagrange pressure per interval (incompressible kind, when requested).
  std::vector<ScalarField> pressure;

  // Filled by minimize.
  std::vector<double> pi_history;
  std::vector<double> grad_norm_history;
  int iterations = 0;
  double wall_seconds = 0.0;
  std::string status;
};

struct AssembleOptions {
  bool with_pressure = false;
};

SbenReport assemble_pi_incompressible(const Path& path, const SbenProblem& prob, const AssembleOptions& opt = {});
SbenReport assemble_pi_compressible(const Path& path, const SbenProblem& prob, const AssembleOptions& opt = {});
/// Dispatches on the path's equation of state.
SbenReport assemble_pi(const Path& path, const SbenProblem& prob, const AssembleOptions& opt = {});

/// Gradient of Pi with respect to v_1..v_N in the quadrature inner product
/// (entry k - 1 belongs to v_k). Incompressible: slices are Leray projected.
/// Compressible: densities are treated as slaved to the velocities through
/// the midpoint mass balance, and their dependence is folded in by an
/// adjoint sweep; the path must already be slaved.
struct PathGradient {
  double pi = 0.0;
  std::vector<VectorField> dv;
};
PathGradient gradient_pi(const Path& path, const SbenProblem& prob);

/// Navier-Stokes residual K v_mid - P f on one interval of the path.
VectorField ns_residual(const Path& path, int interval, const SbenProblem& prob);

}  // namespace sben
