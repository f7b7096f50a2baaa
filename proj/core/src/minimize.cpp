#include "sben/minimize.hpp"

#include <chrono>
#include <cmath>

namespace sben {

const char* to_string(MinimizeStatus s) {
  switch (s) {
    case MinimizeStatus::converged_pi: return "converged_pi";
    case MinimizeStatus::converged_gradient: return "converged_gradient";
    case MinimizeStatus::max_iterations: return "max_iterations";
    case MinimizeStatus::line_search_failed: return "line_search_failed";
  }
  return "unknown";
}

namespace {

using Slices = std::vector<VectorField>;

double dot(const Slices& a, const Slices& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += inner(a[k], b[k]);
  return s;
}

/// Free-variable gradient: kernel content is frozen.
Slices free_gradient(PathGradient& g) {
  for (VectorField& s : g.dv) remove_null_modes(s);
  return std::move(g.dv);
}

Path step(const Path& base, const Slices& d, double alpha) {
  Path p = base;
  p.pressure.clear();
  for (std::size_t k = 0; k < d.size(); ++k) p.states[k + 1].v.axpy(alpha, d[k]);
  if (!p.incompressible()) slave_density(p);
  return p;
}

double evaluate(const Path& p, const SbenProblem& prob) { return assemble_pi(p, prob).pi; }

}  // namespace

MinimizeResult minimize(const Path& start, const SbenProblem& prob, const MinimizeOptions& opt) {
  const auto clock_start = std::chrono::steady_clock::now();
  validate_path(start);

  Path x = start;
  x.pressure.clear();
  if (x.incompressible()) {
    for (std::size_t k = 1; k < x.states.size(); ++k) x.states[k].v = leray_project(x.states[k].v).v;
  } else {
    slave_density(x);
  }

  const SbenReport initial = assemble_pi(x, prob);
  const double tol_pi = opt.tol_pi_rel * initial.phi_integral;

  PathGradient pg = gradient_pi(x, prob);
  double pi = pg.pi;
  Slices g = free_gradient(pg);
  const double g0 = std::sqrt(dot(g, g));

  MinimizeResult res;
  res.status = MinimizeStatus::max_iterations;
  std::vector<double> pi_hist{pi};
  std::vector<double> g_hist{g0};

  Slices d;
  Slices g_prev;
  double alpha_prev = 0.0;
  double slope_prev = 0.0;
  int since_restart = 0;
  int it = 0;
  for (; it < opt.max_iter; ++it) {
    const double gnorm = std::sqrt(dot(g, g));
    if (pi <= tol_pi) {
      res.status = MinimizeStatus::converged_pi;
      break;
    }
    if (gnorm <= opt.tol_grad_rel * g0 || gnorm == 0.0) {
      res.status = MinimizeStatus::converged_gradient;
      break;
    }

    // Polak-Ribiere+ direction with periodic restarts.
    bool steepest = d.empty() || since_restart >= opt.restart_every;
    double beta = 0.0;
    if (!steepest) {
      double num = 0.0;
      for (std::size_t k = 0; k < g.size(); ++k) num += inner(g[k], g[k] - g_prev[k]);
      beta = std::max(0.0, num / dot(g_prev, g_prev));
    }
    Slices dn(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
      dn[k] = -g[k];
      if (!steepest && beta > 0.0) dn[k].axpy(beta, d[k]);
    }
    double slope = dot(g, dn);
    if (slope >= 0.0) {
      for (std::size_t k = 0; k < g.size(); ++k) dn[k] = -g[k];
      slope = -gnorm * gnorm;
      steepest = true;
    }
    if (steepest) since_restart = 0;

    // Initial trial: previous step rescaled by the change in slope, or a
    // step that moves the path by 1% on the first iteration.
    double alpha;
    if (alpha_prev > 0.0) {
      alpha = alpha_prev * slope_prev / slope;
    } else {
      double xnorm = 0.0;
      for (std::size_t k = 1; k < x.states.size(); ++k) xnorm += inner(x.states[k].v, x.states[k].v);
      alpha = 1e-2 * std::sqrt(std::max(xnorm, 1e-300)) / std::sqrt(dot(dn, dn));
    }

    // Armijo backtracking; a quadratic-model trial is tried alongside.
    bool accepted = false;
    Path best;
    double best_pi = pi;
    double best_alpha = 0.0;
    for (int bt = 0; bt < opt.max_backtracks; ++bt) {
      Path trial = step(x, dn, alpha);
      const double pt = evaluate(trial, prob);
      const double curvature = (pt - pi - alpha * slope) / (alpha * alpha);
      if (pt <= pi + opt.armijo_c * alpha * slope) {
        accepted = true;
        best = std::move(trial);
        best_pi = pt;
        best_alpha = alpha;
        if (curvature > 0.0) {
          const double aq = -slope / (2.0 * curvature);
          if (std::abs(aq - alpha) > 0.1 * alpha) {
            Path qtrial = step(x, dn, aq);
            const double pq = evaluate(qtrial, prob);
            if (pq < best_pi && pq <= pi + opt.armijo_c * aq * slope) {
              best = std::move(qtrial);
              best_pi = pq;
              best_alpha = aq;
            }
          }
        }
        break;
      }
      double next = opt.shrink * alpha;
      if (curvature > 0.0) next = std::clamp(-slope / (2.0 * curvature), 0.1 * alpha, opt.shrink * alpha);
      alpha = next;
    }

    if (!accepted) {
      if (!steepest) {
        // Retry from steepest descent before giving up.
        d.clear();
        alpha_prev = 0.0;
        --it;
        since_restart = opt.restart_every;
        continue;
      }
      res.status = MinimizeStatus::line_search_failed;
      break;
    }

    x = std::move(best);
    alpha_prev = best_alpha;
    slope_prev = slope;
    d = std::move(dn);
    g_prev = std::move(g);
    pg = gradient_pi(x, prob);
    pi = pg.pi;
    g = free_gradient(pg);
    ++since_restart;
    pi_hist.push_back(pi);
    g_hist.push_back(std::sqrt(dot(g, g)));
  }

  res.report = assemble_pi(x, prob, AssembleOptions{.with_pressure = true});
  res.report.pi_history = std::move(pi_hist);
  res.report.grad_norm_history = std::move(g_hist);
  res.report.iterations = it;
  res.report.status = to_string(res.status);
  res.report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - clock_start).count();
  if (x.incompressible()) x.pressure = res.report.pressure;
  res.path = std::move(x);
  return res;
}

}  // namespace sben
