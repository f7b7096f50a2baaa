#include "sben/symplectic.hpp"

#include <algorithm>

namespace sben {

double omega(const PhasePoint& z, const PhasePoint& zp) {
  require_same_grid(z.v.grid(), zp.v.grid());
  return inner(z.v, zp.pidot) - inner(z.pidot, zp.v);
}

namespace {

PhaseDecomposition decompose_with(const FluidState& prev, const FluidState& next, const Momentum& pi_prev,
                                  const Momentum& pi_next, const Gravitation& G, VectorField pi_I) {
  const IntervalMidpoint m = midpoint(prev, next);
  const VectorField pi_mid = 0.5 * (pi_prev.pi + pi_next.pi);
  PhaseDecomposition d;
  d.v_I = m.v;
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t k = 0; k < m.v.cells(); ++k) d.v_I.at(c, k) -= pi_mid.at(c, k) / m.rho.at(0, k);
  }
  if (!G.is_zero()) d.v_I += G.sample_A(m.v.grid(), m.t_mid);
  d.pi_I = std::move(pi_I);
  return d;
}

}  // namespace

PhaseDecomposition decompose(const FluidState& prev, const FluidState& next, const Momentum& pi_prev,
                             const Momentum& pi_next, const Gravitation& G) {
  return decompose_with(prev, next, pi_prev, pi_next, G, pi_I_residual(prev, next, G));
}

PhaseDecomposition decompose(const FluidState& prev, const FluidState& next, const Momentum& pi_prev,
                             const Momentum& pi_next, const Gravitation& G, const ScalarField& pressure) {
  return decompose_with(prev, next, pi_prev, pi_next, G, pi_I_residual(prev, next, G, pressure));
}

PolarValue symplectic_polar(const PhaseDecomposition& zI, const Viscosity& visc, const ConjugateSolve& cfg,
                            double v_tol, double v_scale) {
  PolarValue out;
  out.v_I_max = norm_max(zI.v_I);
  if (out.v_I_max > v_tol * v_scale) return out;
  VectorField f = -zI.pi_I;
  out.discarded = remove_null_modes(f);
  out.value = phi_star(f, visc, cfg);
  return out;
}

std::optional<double> constitutive_gap(const PhasePoint& z, const PhaseDecomposition& zI, const Viscosity& visc,
                                       const ConjugateSolve& cfg, double v_tol) {
  const double v_scale = std::max(1.0, norm_max(z.v));
  if (norm_max(zI.v_I) > v_tol * v_scale) return std::nullopt;
  VectorField f = -zI.pi_I;
  remove_null_modes(f);
  // phi(v) + phi*(f) - omega(zeta_I, zeta)
  //   = fenchel_gap(v, f) + <f, v> - omega(zeta_I, zeta)
  const PhasePoint irreversible{zI.v_I, zI.pi_I};
  return fenchel_gap(z.v, f, visc, cfg) + inner(f, z.v) - omega(irreversible, z);
}

}  // namespace sben
