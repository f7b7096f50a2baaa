#include <algorithm>
#include <cmath>
#include <numbers>

#include "cli.hpp"
#include "sben/random_fields.hpp"
#include "sben/symplectic.hpp"

namespace sben::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double frobenius(const SymTensorField& a, const SymTensorField& b) {
  double s = 0.0;
  for (std::size_t c = 0; c < 6; ++c) {
    const double w = c < 3 ? 1.0 : 2.0;
    for (std::size_t k = 0; k < a.cells(); ++k) s += w * a.at(c, k) * b.at(c, k);
  }
  return s * a.grid().cell_area();
}

CheckItem upper(std::string name, double value, double bound) {
  return {std::move(name), value, bound, std::isfinite(value) && value <= bound};
}

CheckItem lower(std::string name, double value, double bound) {
  return {std::move(name), value, bound, std::isfinite(value) && value >= bound};
}

// Smooth compressible fields that satisfy no balance law; the gravitation
// potentials are periodic on the box.
FluidState manufactured(const Grid2P& g, double t) {
  FluidState s;
  s.t = t;
  s.eos = Eos::barotropic_power(1.0, 1.0, 1.4);
  s.rho = ScalarField::sample(g, [&](double x, double y) {
    return std::array<double, 1>{1.0 + 0.2 * std::sin(x - t) * std::cos(y)};
  });
  s.v = VectorField::sample(g, [&](double x, double y) {
    return std::array<double, 3>{0.3 * std::sin(y + t), 0.2 * std::cos(x), 0.1 * std::sin(x + y)};
  });
  return s;
}

double momentum_form_error(int n, const Gravitation& G) {
  const Grid2P g(n, n, kTwoPi, kTwoPi);
  const double dt = g.dx() / 4.0;
  return norm_max(momentum_form_gap(manufactured(g, 0.3), manufactured(g, 0.3 + dt), G));
}

double grad_error(const Grid2P& g) {
  const double kx = kTwoPi / g.lx, ky = kTwoPi / g.ly;
  const ScalarField s = ScalarField::sample(g, [&](double x, double y) {
    return std::array<double, 1>{std::sin(kx * x) * std::cos(2.0 * ky * y)};
  });
  const VectorField exact = VectorField::sample(g, [&](double x, double y) {
    return std::array<double, 3>{kx * std::cos(kx * x) * std::cos(2.0 * ky * y),
                                 -2.0 * ky * std::sin(kx * x) * std::sin(2.0 * ky * y), 0.0};
  });
  return norm_max(grad_scalar(s) - exact);
}

}  // namespace

std::vector<CheckItem> run_check_suite(const RunConfig& cfg) {
  std::vector<CheckItem> items;
  const Grid2P& g = cfg.grid;
  const Viscosity& visc = cfg.visc;
  ConjugateSolve conj = cfg.conj;
  conj.tol = std::min(conj.tol, 1e-12);
  Rng rng(cfg.seed);

  {
    double worst = 0.0, worst_t = 0.0;
    for (int r = 0; r < 5; ++r) {
      const ScalarField s = random_smooth_scalar(g, rng);
      const VectorField v = random_smooth_vector(g, rng);
      const double lhs = inner(grad_scalar(s), v);
      const double rhs = -inner(s, div_vector(v));
      worst = std::max(worst, std::abs(lhs - rhs) / (norm_l2(s) * norm_l2(v)));
      const SymTensorField t = random_sym_tensor(g, rng);
      const double a = frobenius(t, sym_grad(v));
      const double b = -inner(div_tensor(t), v);
      worst_t = std::max(worst_t, std::abs(a - b) / (std::sqrt(frobenius(t, t)) * norm_l2(v)));
    }
    items.push_back(upper("grad/div adjointness", worst, 1e-12));
    items.push_back(upper("div_tensor/sym_grad adjointness", worst_t, 1e-12));
  }

  {
    const Grid2P fine(2 * g.nx, 2 * g.ny, g.lx, g.ly);
    items.push_back(lower("gradient order", std::log2(grad_error(g) / grad_error(fine)), 1.8));
  }

  {
    double sym = 0.0, two_phi = 0.0, tr = 0.0;
    for (int r = 0; r < 5; ++r) {
      const VectorField u = random_smooth_vector(g, rng);
      const VectorField w = random_smooth_vector(g, rng);
      const VectorField Ku = apply_K(u, visc);
      const double scale = norm_l2(Ku) * norm_l2(w) + 1e-300;
      sym = std::max(sym, std::abs(inner(Ku, w) - inner(u, apply_K(w, visc))) / scale);
      const double p = phi(u, visc);
      two_phi = std::max(two_phi, std::abs(inner(Ku, u) - 2.0 * p) / p);
      const SymTensorField s = sigma_I(sym_grad(u), visc.mu);
      tr = std::max(tr, norm_max(trace(s)) / (norm_max(s) + 1e-300));
    }
    items.push_back(upper("K symmetry", sym, 1e-12));
    items.push_back(upper("<Ku,u> = 2 phi(u)", two_phi, 1e-12));
    items.push_back(upper("Tr sigma_I = 0", tr, 1e-14));
  }

  {
    double worst_ineq = 0.0, worst_eq = 0.0, worst_d = 0.0, worst_forms = 0.0;
    for (int r = 0; r < 20; ++r) {
      const VectorField v = random_smooth_vector(g, rng);
      VectorField f = random_smooth_vector(g, rng);
      remove_null_modes(f);
      const double gap = fenchel_gap(v, f, visc, conj);
      const double scale = phi(v, visc) + phi_star(f, visc, conj) + 1.0;
      worst_ineq = std::max(worst_ineq, -gap / scale);
      const VectorField Kv = apply_K(v, visc);
      const double pv = phi(v, visc);
      worst_eq = std::max(worst_eq, std::abs(fenchel_gap(v, Kv, visc, conj)) / pv);
      const ConjugateValue cv = phi_star_detail(Kv, visc, conj);
      worst_d = std::max(worst_d, std::abs(cv.value - pv) / pv);
      worst_forms = std::max(worst_forms, std::abs(cv.phi_of_solution - cv.half_pairing) / pv);
    }
    items.push_back(upper("Fenchel inequality (-gap / scale)", worst_ineq, 1e-12));
    items.push_back(upper("Fenchel equality at f = K v", worst_eq, 1e-8));
    items.push_back(upper("phi*(K v) = phi(v)", worst_d, 1e-8));
    items.push_back(upper("phi(u) = <f,u>/2 at u = K^-1 f", worst_forms, 1e-8));
  }

  {
    const Gravitation G = Gravitation::periodic_potentials(0.3, 0.2, 1.0);
    const double e1 = momentum_form_error(g.nx, G);
    const double e2 = momentum_form_error(2 * g.nx, G);
    items.push_back(lower("momentum form identity order", std::log2(e1 / e2), 1.8));
  }

  {
    double anti = 0.0, bil = 0.0;
    for (int r = 0; r < 10; ++r) {
      const PhasePoint a{random_smooth_vector(g, rng), random_smooth_vector(g, rng)};
      const PhasePoint b{random_smooth_vector(g, rng), random_smooth_vector(g, rng)};
      const PhasePoint c{random_smooth_vector(g, rng), random_smooth_vector(g, rng)};
      const double na = std::hypot(norm_l2(a.v), norm_l2(a.pidot));
      const double nb = std::hypot(norm_l2(b.v), norm_l2(b.pidot));
      const double nc = std::hypot(norm_l2(c.v), norm_l2(c.pidot));
      anti = std::max(anti, std::abs(omega(a, b) + omega(b, a)) / (na * nb));
      const double alpha = 0.7;
      const PhasePoint mix{alpha * a.v + c.v, alpha * a.pidot + c.pidot};
      bil = std::max(bil, std::abs(omega(mix, b) - alpha * omega(a, b) - omega(c, b)) / ((na + nc) * nb));
    }
    items.push_back(upper("omega antisymmetry", anti, 1e-12));
    items.push_back(upper("omega bilinearity", bil, 1e-12));
  }

  {
    const Gravitation G = cfg.G.is_zero() ? Gravitation::periodic_potentials(0.3, 0.2, 1.0) : cfg.G;
    const VectorField v = random_smooth_vector(g, rng);
    const VectorField Om = eval_coriolis_vector(G, g, 0.4);
    const double scale = norm_max(Om) * norm_max(v) * norm_max(v) + 1e-300;
    items.push_back(upper("Coriolis power v.(Omega x v)", norm_max(dot(v, cross(Om, v))) / scale, 1e-12));
  }

  {
    const VectorField v = random_smooth_vector(g, rng);
    const VectorField p1 = leray_project(v).v;
    const VectorField p2 = leray_project(p1).v;
    items.push_back(upper("Leray idempotence", norm_l2(p2 - p1) / norm_l2(p1), 1e-10));
    items.push_back(upper("Leray divergence", norm_max(div_vector(p1)) / norm_max(v), 1e-10));
  }

  {
    // Discrete eigenvalue of K on the Taylor-Green mode: 2 mu (sin h / h)^2.
    const Grid2P box(g.nx, g.nx, kTwoPi, kTwoPi);
    const VectorField v = taylor_green_analytic(0.0, 0.0, box).state.v;
    const double h = box.dx();
    const double s = std::sin(h) / h;
    const VectorField r = apply_K(v, visc) - (2.0 * visc.mu * s * s) * v;
    items.push_back(upper("Taylor-Green eigenmode of K", norm_max(r) / (2.0 * visc.mu), 1e-12));
  }

  return items;
}

}  // namespace sben::cli
