#include "sben/dissipation.hpp"

#include <sstream>

#include "sben/linear_solve.hpp"

namespace sben {

Viscosity::Viscosity(double mu_) : mu(mu_) {
  if (!(mu > 0.0)) throw ConfigError("viscosity.mu", "must be positive");
}

ScalarField w_density(const SymTensorField& D, double mu) {
  using namespace sym;
  ScalarField w(D.grid());
  for (std::size_t k = 0; k < D.cells(); ++k) {
    const double dxx = D.at(xx, k), dyy = D.at(yy, k), dzz = D.at(zz, k);
    const double off = D.at(xy, k) * D.at(xy, k) + D.at(xz, k) * D.at(xz, k) + D.at(yz, k) * D.at(yz, k);
    const double tr = dxx + dyy + dzz;
    w.at(0, k) = mu * (dxx * dxx + dyy * dyy + dzz * dzz + 2.0 * off - tr * tr / 3.0);
  }
  return w;
}

SymTensorField sigma_I(const SymTensorField& D, double mu) {
  using namespace sym;
  SymTensorField s(D.grid());
  for (std::size_t k = 0; k < D.cells(); ++k) {
    const double third_tr = (D.at(xx, k) + D.at(yy, k) + D.at(zz, k)) / 3.0;
    for (std::size_t c = 0; c < 6; ++c) s.at(c, k) = 2.0 * mu * D.at(c, k);
    for (std::size_t c : {xx, yy, zz}) s.at(c, k) -= 2.0 * mu * third_tr;
  }
  return s;
}

double phi(const VectorField& v, const Viscosity& visc) { return integrate(w_density(sym_grad(v), visc.mu)); }

VectorField apply_K(const VectorField& v, const Viscosity& visc) {
  VectorField f = div_tensor(sigma_I(sym_grad(v), visc.mu));
  f *= -1.0;
  return f;
}

namespace {

void check_range(const VectorField& f, const ConjugateSolve& cfg) {
  const double kernel = null_mode_norm(f);
  const double total = norm_l2(f);
  if (kernel > cfg.range_tol * total && kernel > 0.0) {
    std::ostringstream msg;
    msg << "f outside range of K: kernel content " << kernel << " of norm " << total;
    throw NumericalError(msg.str());
  }
}

}  // namespace

ConjugateValue phi_star_detail(const VectorField& f, const Viscosity& visc, const ConjugateSolve& cfg) {
  check_range(f, cfg);
  VectorField rhs = f;
  remove_null_modes(rhs);
  ConjugateValue out;
  out.solution = VectorField(f.grid());
  const CgResult cg = conjugate_gradient(
      [&](const VectorField& x) { return apply_K(x, visc); }, rhs, out.solution, cfg.tol, cfg.max_iter,
      [](VectorField& x) { remove_null_modes(x); });
  out.iterations = cg.iterations;
  out.relative_residual = cg.relative_residual;
  if (!cg.converged) {
    std::ostringstream msg;
    msg << "conjugate solve did not converge: relative residual " << cg.relative_residual << " after "
        << cg.iterations << " iterations (tol " << cfg.tol << ")";
    throw NumericalError(msg.str());
  }
  const VectorField ku = apply_K(out.solution, visc);
  const double pairing = inner(rhs, out.solution);
  out.phi_of_solution = phi(out.solution, visc);
  out.half_pairing = 0.5 * pairing;
  out.value = pairing - 0.5 * inner(ku, out.solution);
  return out;
}

VectorField solve_K(const VectorField& f, const Viscosity& visc, const ConjugateSolve& cfg) {
  return phi_star_detail(f, visc, cfg).solution;
}

double phi_star(const VectorField& f, const Viscosity& visc, const ConjugateSolve& cfg) {
  return phi_star_detail(f, visc, cfg).value;
}

double fenchel_gap(const VectorField& v, const VectorField& f, const Viscosity& visc, const ConjugateSolve& cfg) {
  require_same_grid(v.grid(), f.grid());
  const ConjugateValue c = phi_star_detail(f, visc, cfg);
  VectorField d = c.solution - v;
  remove_null_modes(d);
  VectorField r = f;
  remove_null_modes(r);
  r -= apply_K(c.solution, visc);
  return 0.5 * inner(apply_K(d, visc), d) + inner(r, d);
}

}  // namespace sben
