#pragma once

#include "sben/functional.hpp"

namespace sben {

struct MinimizeOptions {
  int max_iter = 500;
  /// Stop once Pi <= tol_pi_rel * (sum_k dt phi) of the starting path.
  double tol_pi_rel = 1e-8;
  /// Stop once ||grad|| <= tol_grad_rel * ||grad_0||.
  double tol_grad_rel = 1e-6;
  int restart_every = 20;
  double armijo_c = 1e-4;
  double shrink = 0.5;
  int max_backtracks = 40;
};

enum class MinimizeStatus { converged_pi, converged_gradient, max_iterations, line_search_failed };

const char* to_string(MinimizeStatus s);

struct MinimizeResult {
  Path path;
  SbenReport report;
  MinimizeStatus status = MinimizeStatus::max_iterations;
};

/// Nonlinear conjugate gradient (Polak-Ribiere+, periodic restarts) with an
/// Armijo backtracking line search over v_1..v_N. v_0 is pinned and the
/// kernel content (mean, checkerboards) of every slice is held at its
/// starting value. Incompressible paths stay on the divergence-free
/// subspace; compressible paths re-slave the density after every trial step
/// (experimental). Accepted steps never increase Pi. On line-search failure
/// the last accepted path is returned with that status.
MinimizeResult minimize(const Path& start, const SbenProblem& prob, const MinimizeOptions& opt = {});

}  // namespace sben
