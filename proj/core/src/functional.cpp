#include "sben/functional.hpp"

#include <algorithm>

#include "sben/parallel.hpp"

namespace sben {

namespace {

VectorField project_range(const VectorField& f, bool incompressible) {
  VectorField out = incompressible ? leray_project(f).v : f;
  remove_null_modes(out);
  return out;
}

/// Everything one interval contributes, kept around for the gradient.
struct IntervalEval {
  IntervalMidpoint m;
  VectorField accel;  // Dv/Dt
  VectorField body;   // g - 2 Omega x v_mid
  VectorField pf;     // P f
  VectorField kv;     // K v_mid
  VectorField u;      // K^+ (P f - K v_mid)
  ScalarField pressure;
  IntervalTerms terms;
};

IntervalEval evaluate_interval(const FluidState& a, const FluidState& b, const SbenProblem& prob,
                               bool incompressible) {
  IntervalEval e;
  e.m = midpoint(a, b);
  const Grid2P& grid = e.m.v.grid();
  e.accel = material_derivative(a, b);
  const VectorField g = eval_gravity(prob.G, grid, e.m.t_mid);
  e.body = gravitation_force(ScalarField(grid, 1.0), e.m.v, prob.G, e.m.t_mid);

  VectorField f = scale(e.m.rho, e.body - e.accel);
  VectorField pairing_density = scale(e.m.rho, e.accel - g);
  if (!incompressible) {
    e.pressure = interval_pressure(a, b);
    const VectorField gp = grad_scalar(e.pressure);
    f -= gp;
    pairing_density += gp;
  }
  e.pf = project_range(f, incompressible);
  e.kv = apply_K(e.m.v, prob.visc);
  VectorField r = e.pf - e.kv;

  const ConjugateValue cv = phi_star_detail(r, prob.visc, prob.conj);
  e.u = cv.solution;

  IntervalTerms& t = e.terms;
  t.t_mid = e.m.t_mid;
  t.gap = cv.value;
  t.cg_iterations = cv.iterations;
  t.phi = phi(e.m.v, prob.visc);
  VectorField w = e.u + e.m.v;
  remove_null_modes(w);
  t.phi_star = inner(e.pf, w) - 0.5 * inner(apply_K(w, prob.visc), w);
  t.pairing = -inner(e.pf, e.m.v);
  t.excluded_pairing = inner(pairing_density, e.m.v) - t.pairing;
  t.dropped = null_mode_norm(f);
  t.ns_residual_max = norm_max(r);
  t.ns_residual_l2 = norm_l2(r);
  t.mass_residual_max = norm_max(mass_residual(a, b));
  return e;
}

std::vector<IntervalEval> evaluate_all(const Path& path, const SbenProblem& prob, bool incompressible) {
  validate_path(path);
  std::vector<IntervalEval> evals(static_cast<std::size_t>(path.intervals()));
  parallel_for(evals.size(), prob.threads, [&](std::size_t k) {
    evals[k] = evaluate_interval(path.states[k], path.states[k + 1], prob, incompressible);
  });
  return evals;
}

SbenReport assemble(const Path& path, const SbenProblem& prob, const AssembleOptions& opt, bool incompressible) {
  const std::vector<IntervalEval> evals = evaluate_all(path, prob, incompressible);
  SbenReport rep;
  rep.incompressible = incompressible;
  const double dt = path.dt();
  for (const IntervalEval& e : evals) {
    rep.intervals.push_back(e.terms);
    rep.pi += dt * e.terms.gap;
    rep.phi_integral += dt * e.terms.phi;
  }
  for (const FluidState& s : path.states) rep.max_divergence = std::max(rep.max_divergence, norm_max(div_vector(s.v)));
  if (incompressible && opt.with_pressure) {
    rep.pressure.resize(evals.size());
    parallel_for(evals.size(), prob.threads, [&](std::size_t k) {
      const IntervalEval& e = evals[k];
      // f - K v_mid = grad p on a Navier-Stokes interval
      VectorField f = scale(e.m.rho, e.body - e.accel);
      rep.pressure[k] = leray_project(f - e.kv).q;
    });
  }
  return rep;
}

/// (A')^T y for A(v) = (v . grad) v: (grad v)^T y - sum_j d_j (v_j y).
VectorField advect_adjoint(const VectorField& v, const VectorField& y) {
  const Grid2P& g = v.grid();
  const TensorField gv = grad_vector(v);
  VectorField out(g);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < g.cells(); ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < 3; ++i) s += gv.at(3 * i + j, k) * y.at(i, k);
      out.at(j, k) = s;
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    VectorField flux(g);
    for (std::size_t k = 0; k < g.cells(); ++k) {
      flux.at(0, k) = v.at(0, k) * y.at(i, k);
      flux.at(1, k) = v.at(1, k) * y.at(i, k);
    }
    const ScalarField d = div_vector(flux);
    for (std::size_t k = 0; k < g.cells(); ++k) out.at(i, k) -= d.at(0, k);
  }
  return out;
}

/// Solves lambda - h v . grad(lambda) = s, i.e. (I + h B)^T lambda = s for
/// B rho = div(rho v), by fixed-point iteration.
ScalarField solve_transport_adjoint(const ScalarField& s, const VectorField& v, double h) {
  ScalarField lambda = s;
  const double size = std::max(norm_l2(s), 1e-300);
  for (int it = 0; it < 500; ++it) {
    ScalarField next = s;
    next.axpy(h, dot(v, grad_scalar(lambda)));
    const double change = norm_l2(next - lambda);
    lambda = std::move(next);
    if (change <= 1e-14 * size) return lambda;
  }
  throw NumericalError("adjoint mass balance fixed point diverged; reduce the time step");
}

}  // namespace

SbenReport assemble_pi_incompressible(const Path& path, const SbenProblem& prob, const AssembleOptions& opt) {
  if (!path.incompressible()) throw Error("incompressible functional needs an incompressible equation of state");
  return assemble(path, prob, opt, true);
}

SbenReport assemble_pi_compressible(const Path& path, const SbenProblem& prob, const AssembleOptions& opt) {
  if (path.incompressible()) throw Error("compressible functional needs a barotropic equation of state");
  return assemble(path, prob, opt, false);
}

SbenReport assemble_pi(const Path& path, const SbenProblem& prob, const AssembleOptions& opt) {
  return path.incompressible() ? assemble_pi_incompressible(path, prob, opt)
                               : assemble_pi_compressible(path, prob, opt);
}

PathGradient gradient_pi(const Path& path, const SbenProblem& prob) {
  const bool incompressible = path.incompressible();
  const std::vector<IntervalEval> evals = evaluate_all(path, prob, incompressible);
  const int n = path.intervals();
  const double dt = path.dt();
  const Grid2P& grid = path.grid();

  // Per-interval contributions to v_k (left) and v_{k+1} (right).
  std::vector<VectorField> left(n), right(n);
  std::vector<ScalarField> drho(incompressible ? 0 : n);  // d Pi / d rho_mid
  std::vector<ScalarField> div_w(incompressible ? 0 : n);

  parallel_for(static_cast<std::size_t>(n), prob.threads, [&](std::size_t k) {
    const IntervalEval& e = evals[k];
    VectorField w = incompressible ? leray_project(e.u).v : e.u;
    remove_null_modes(w);
    const VectorField y = scale(e.m.rho, w);
    VectorField mid = e.kv - e.pf;
    mid -= advect_adjoint(e.m.v, y);
    if (!prob.G.is_zero()) {
      mid.axpy(2.0, cross(eval_coriolis_vector(prob.G, grid, e.m.t_mid), y));
    }
    left[k] = 0.5 * dt * mid + y;
    right[k] = 0.5 * dt * mid - y;
    if (!incompressible) {
      drho[k] = dot(w, e.body - e.accel);
      drho[k] *= dt;
      div_w[k] = div_vector(w);
      div_w[k] *= dt;
    }
  });

  PathGradient out;
  for (const IntervalEval& e : evals) out.pi += dt * e.terms.gap;
  out.dv.assign(static_cast<std::size_t>(n), VectorField(grid));
  for (int k = 0; k < n; ++k) {
    if (k > 0) out.dv[k - 1] += left[k];
    out.dv[k] += right[k];
  }

  if (!incompressible) {
    // d Pi / d rho_j for j = 1..N from both adjacent intervals:
    // (1/2) w . (body - a) + (1/2) p'(rho_j) div w, each scaled by dt.
    const Eos& eos = path.eos();
    auto explicit_drho = [&](int j) {
      ScalarField s(grid);
      for (int k : {j - 1, j}) {
        if (k < 0 || k >= n) continue;
        for (std::size_t c = 0; c < grid.cells(); ++c) {
          const double rho = path.states[j].rho.at(0, c);
          s.at(0, c) += 0.5 * drho[k].at(0, c) + 0.5 * eos.dpressure_drho(rho) * div_w[k].at(0, c);
        }
      }
      return s;
    };
    // Constraint c_k = rho_{k+1} - rho_k + dt div(rho_mid v_mid) with
    // multiplier lambda_k; sweep backwards from the free terminal state.
    const double h = 0.5 * dt;
    ScalarField carry(grid);  // (I - h B_j)^T lambda_j; no constraint beyond the end
    for (int j = n; j >= 1; --j) {
      ScalarField s = carry - explicit_drho(j);
      const VectorField& vm = evals[j - 1].m.v;
      const ScalarField lambda = solve_transport_adjoint(s, vm, h);
      // contribution -dt rho_mid grad(lambda) to v_mid, split between ends
      VectorField contrib = scale(evals[j - 1].m.rho, grad_scalar(lambda));
      contrib *= -0.5 * dt;
      out.dv[j - 1] += contrib;
      if (j - 2 >= 0) out.dv[j - 2] += contrib;
      carry = lambda;
      carry.axpy(h, dot(vm, grad_scalar(lambda)));
    }
  }

  parallel_for(out.dv.size(), prob.threads, [&](std::size_t k) {
    if (incompressible) out.dv[k] = leray_project(out.dv[k]).v;
  });
  return out;
}

VectorField ns_residual(const Path& path, int interval, const SbenProblem& prob) {
  validate_path(path);
  if (interval < 0 || interval >= path.intervals()) throw Error("interval index out of range");
  const IntervalEval e =
      evaluate_interval(path.states[interval], path.states[interval + 1], prob, path.incompressible());
  return e.kv - e.pf;
}

}  // namespace sben
