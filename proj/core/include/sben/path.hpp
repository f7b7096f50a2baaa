#pragma once

// Time-sampled evolution paths and the divergence-free projection.

#include <vector>

#include "sben/balance.hpp"
#include "sben/dissipation.hpp"

namespace sben {

struct LerayResult {
  VectorField v;
  /// Potential with v_in = v + grad(q); kernel-free.
  ScalarField q;
  int iterations = 0;
};

/// Helmholtz projection onto discretely divergence-free fields. The kernel
/// content of the input (mean and checkerboards) is kept. Throws
/// NumericalError if the Poisson solve does not converge.
LerayResult leray_project(const VectorField& v, double tol = 1e-13, int max_iter = 5000);

/// Samples at uniform times t_0 < ... < t_N. The state at t_0 is pinned;
/// `pressure` is empty or holds one Lagrange pressure per interval.
struct Path {
  std::vector<FluidState> states;
  std::vector<ScalarField> pressure;

  int intervals() const { return static_cast<int>(states.size()) - 1; }
  double dt() const { return states[1].t - states[0].t; }
  double t_end() const { return states.back().t; }
  const Grid2P& grid() const { return states.front().grid(); }
  const Eos& eos() const { return states.front().eos; }
  bool incompressible() const { return eos().incompressible(); }
};

/// Throws Error unless the path has >= 1 interval, a uniform positive time
/// step, a single grid and a single equation of state.
void validate_path(const Path& path);

/// Re-solves rho_1..rho_N from rho_0 and the velocities with the midpoint
/// mass balance rho_{k+1} - rho_k + dt div(rho_mid v_mid) = 0.
void slave_density(Path& path, double tol = 1e-14, int max_iter = 500);

/// Relative L2 distance over the whole path: sqrt(sum_k |a_k - b_k|^2 / sum_k |b_k|^2).
double path_distance(const Path& a, const Path& b);

}  // namespace sben
