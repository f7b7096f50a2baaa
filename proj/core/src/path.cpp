#include "sben/path.hpp"

#include <cmath>
#include <sstream>

#include "sben/linear_solve.hpp"

namespace sben {

LerayResult leray_project(const VectorField& v, double tol, int max_iter) {
  LerayResult out;
  ScalarField rhs = div_vector(v);
  rhs *= -1.0;
  remove_null_modes(rhs);
  out.q = ScalarField(v.grid());
  const CgResult cg = conjugate_gradient(
      [](const ScalarField& q) {
        ScalarField l = laplacian(q);
        l *= -1.0;
        return l;
      },
      rhs, out.q, tol, max_iter, [](ScalarField& q) { remove_null_modes(q); });
  if (!cg.converged) {
    std::ostringstream msg;
    msg << "pressure Poisson solve did not converge: relative residual " << cg.relative_residual;
    throw NumericalError(msg.str());
  }
  out.iterations = cg.iterations;
  out.v = v;
  out.v -= grad_scalar(out.q);
  return out;
}

void validate_path(const Path& path) {
  if (path.states.size() < 2) throw Error("a path needs at least one interval");
  const double dt = path.dt();
  if (!(dt > 0.0)) throw Error("path times must increase");
  for (std::size_t k = 0; k < path.states.size(); ++k) {
    const FluidState& s = path.states[k];
    require_same_grid(s.grid(), path.grid());
    require_same_grid(s.rho.grid(), path.grid());
    if (s.eos.kind() != path.eos().kind()) throw Error("path mixes equations of state");
    const double expected = path.states[0].t + static_cast<double>(k) * dt;
    if (std::abs(s.t - expected) > 1e-9 * std::max(1.0, std::abs(expected))) {
      throw Error("path time step is not uniform at sample " + std::to_string(k));
    }
  }
  if (!path.pressure.empty() && path.pressure.size() != path.states.size() - 1) {
    throw Error("path pressure must hold one field per interval");
  }
}

void slave_density(Path& path, double tol, int max_iter) {
  const double dt = path.dt();
  for (int k = 0; k < path.intervals(); ++k) {
    const FluidState& a = path.states[k];
    FluidState& b = path.states[k + 1];
    const VectorField vm = 0.5 * (a.v + b.v);
    ScalarField rho = a.rho;
    const double size = norm_l2(a.rho);
    bool converged = false;
    for (int it = 0; it < max_iter; ++it) {
      ScalarField next = a.rho;
      next.axpy(-dt, div_vector(scale(0.5 * (a.rho + rho), vm)));
      const double change = norm_l2(next - rho);
      rho = std::move(next);
      if (change <= tol * size) {
        converged = true;
        break;
      }
    }
    if (!converged) throw NumericalError("mass balance fixed point diverged; reduce the time step");
    b.rho = std::move(rho);
    validate_state(b);
  }
}

double path_distance(const Path& a, const Path& b) {
  if (a.states.size() != b.states.size()) throw Error("paths have different lengths");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < a.states.size(); ++k) {
    const VectorField d = a.states[k].v - b.states[k].v;
    num += inner(d, d);
    den += inner(b.states[k].v, b.states[k].v);
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace sben
