#include "sben/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "sben/random_fields.hpp"

namespace sben {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_unit_box(const Grid2P& g, const char* what) {
  if (std::abs(g.lx - kTwoPi) > 1e-12 * kTwoPi || std::abs(g.ly - kTwoPi) > 1e-12 * kTwoPi) {
    throw ConfigError("grid", std::string(what) + " needs the (2 pi)^2 box");
  }
}

VectorField body_force(const VectorField& v, const Gravitation& G, double t) {
  return gravitation_force(ScalarField(v.grid(), 1.0), v, G, t);
}

void check_step(const FluidState& s, double dt, const Viscosity& visc) {
  const double limit = stable_dt(s, visc);
  if (dt > limit * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "explicit step dt = " << dt << " violates the stability bound; use dt <= " << limit;
    throw NumericalError(msg.str());
  }
}

}  // namespace

AnalyticState taylor_green_analytic(double t, double nu, const Grid2P& grid, double amplitude, double rho0) {
  require_unit_box(grid, "taylor_green");
  const double decay = amplitude * std::exp(-2.0 * nu * t);
  AnalyticState out;
  out.state.t = t;
  out.state.eos = Eos::incompressible(rho0);
  out.state.v = VectorField::sample(grid, [&](double x, double y) {
    return std::array<double, 3>{decay * std::sin(x) * std::cos(y), -decay * std::cos(x) * std::sin(y), 0.0};
  });
  out.state.rho = ScalarField(grid, rho0);
  out.pressure = ScalarField::sample(grid, [&](double x, double y) {
    return std::array<double, 1>{0.25 * rho0 * decay * decay * (std::cos(2.0 * x) + std::cos(2.0 * y))};
  });
  return out;
}

double stable_dt(const FluidState& s, const Viscosity& visc) {
  const Grid2P& g = s.grid();
  double rho_min = std::numeric_limits<double>::infinity();
  for (double r : s.rho.values()) rho_min = std::min(rho_min, r);
  const double inv_h2 = 1.0 / (g.dx() * g.dx()) + 1.0 / (g.dy() * g.dy());
  // Spectral radius of K / rho for the central stencils, and the Heun
  // stability interval [-2, 0] on the real axis.
  const double diffusive = 2.0 / ((4.0 / 3.0) * visc.mu / rho_min * inv_h2);
  double speed_x = 0.0, speed_y = 0.0;
  for (std::size_t k = 0; k < g.cells(); ++k) {
    speed_x = std::max(speed_x, std::abs(s.v.at(0, k)));
    speed_y = std::max(speed_y, std::abs(s.v.at(1, k)));
  }
  if (!s.eos.incompressible()) {
    double c = 0.0;
    for (double r : s.rho.values()) c = std::max(c, s.eos.sound_speed(r));
    speed_x += c;
    speed_y += c;
  }
  const double rate = speed_x / g.dx() + speed_y / g.dy();
  const double advective = rate > 0.0 ? 1.0 / rate : std::numeric_limits<double>::infinity();
  return 0.9 * std::min(diffusive, advective);
}

FluidState step_incompressible(const FluidState& s, double dt, const Viscosity& visc, const Gravitation& G) {
  if (!s.eos.incompressible()) throw Error("step_incompressible needs an incompressible equation of state");
  check_step(s, dt, visc);
  const double rho0 = s.eos.rho0();
  auto rhs = [&](const VectorField& v, double t) {
    VectorField r = body_force(v, G, t);
    r -= advect(v, v);
    r.axpy(-1.0 / rho0, apply_K(v, visc));
    return leray_project(r).v;
  };
  const VectorField k1 = rhs(s.v, s.t);
  VectorField v1 = s.v;
  v1.axpy(dt, k1);
  const VectorField k2 = rhs(v1, s.t + dt);
  VectorField v = s.v;
  v.axpy(0.5 * dt, k1);
  v.axpy(0.5 * dt, k2);
  FluidState out = s;
  out.t = s.t + dt;
  out.v = leray_project(v).v;
  return out;
}

FluidState step_compressible(const FluidState& s, double dt, const Viscosity& visc, const Gravitation& G) {
  if (s.eos.incompressible()) throw Error("step_compressible needs a barotropic equation of state");
  validate_state(s);
  check_step(s, dt, visc);
  auto rhs = [&](const ScalarField& rho, const VectorField& v, double t, ScalarField& drho, VectorField& dv) {
    drho = div_vector(scale(rho, v));
    drho *= -1.0;
    VectorField force = grad_scalar(s.eos.pressure(rho));
    force += apply_K(v, visc);
    force *= -1.0;
    dv = body_force(v, G, t);
    dv -= advect(v, v);
    for (std::size_t c = 0; c < 3; ++c) {
      for (std::size_t k = 0; k < v.cells(); ++k) dv.at(c, k) += force.at(c, k) / rho.at(0, k);
    }
  };
  ScalarField dr1, dr2;
  VectorField dv1, dv2;
  rhs(s.rho, s.v, s.t, dr1, dv1);
  ScalarField rho1 = s.rho;
  rho1.axpy(dt, dr1);
  VectorField v1 = s.v;
  v1.axpy(dt, dv1);
  for (double r : rho1.values()) {
    if (!(r > 0.0)) throw NumericalError("density lost positivity during the step");
  }
  rhs(rho1, v1, s.t + dt, dr2, dv2);
  FluidState out = s;
  out.t = s.t + dt;
  out.rho.axpy(0.5 * dt, dr1);
  out.rho.axpy(0.5 * dt, dr2);
  out.v.axpy(0.5 * dt, dv1);
  out.v.axpy(0.5 * dt, dv2);
  validate_state(out);
  return out;
}

FluidState case_initial_state(const CaseSpec& c, const Grid2P& grid, const Eos& eos) {
  FluidState s;
  s.t = 0.0;
  s.eos = eos;
  const double a = c.amplitude;
  if (c.id == "taylor_green" || c.id == "rigid_rotation") {
    if (!eos.incompressible()) throw ConfigError("eos.kind", c.id + " is an incompressible case");
    s = taylor_green_analytic(0.0, 0.0, grid, a, eos.rho0()).state;
    for (std::size_t k = 0; k < grid.cells(); ++k) {
      s.v.at(0, k) += c.drift_x;
      s.v.at(1, k) += c.drift_y;
    }
    return s;
  }
  if (c.id == "shear_decay") {
    if (!eos.incompressible()) throw ConfigError("eos.kind", "shear_decay is an incompressible case");
    const double ky = kTwoPi / grid.ly;
    s.v = VectorField::sample(grid, [&](double, double y) { return std::array<double, 3>{a * std::sin(ky * y), 0.0, 0.0}; });
    s.rho = ScalarField(grid, eos.rho0());
    return s;
  }
  if (c.id == "compressible_smooth") {
    if (eos.incompressible()) throw ConfigError("eos.kind", "compressible_smooth needs a barotropic eos");
    const double kx = kTwoPi / grid.lx;
    const double ky = kTwoPi / grid.ly;
    s.rho = ScalarField::sample(grid, [&](double x, double y) {
      return std::array<double, 1>{eos.rho0() * (1.0 + a * std::cos(kx * x) * std::cos(ky * y))};
    });
    s.v = VectorField::sample(grid, [&](double x, double y) {
      return std::array<double, 3>{a * (std::sin(kx * x) * std::cos(ky * y) + 0.5 * std::sin(kx * x)),
                                   a * (-std::cos(kx * x) * std::sin(ky * y) + 0.5 * std::sin(ky * y)), 0.0};
    });
    validate_state(s);
    return s;
  }
  throw ConfigError("case.id", "unknown case '" + c.id + "'");
}

Path reference_path(const FluidState& initial, double T, int N, int substeps, const Viscosity& visc,
                    const Gravitation& G) {
  if (!(T > 0.0)) throw ConfigError("time.T", "must be positive");
  if (N < 1) throw ConfigError("time.N", "must be >= 1");
  if (substeps < 1) throw ConfigError("time.substeps", "must be >= 1");
  Path path;
  FluidState s = initial;
  s.t = 0.0;
  if (s.eos.incompressible()) s.v = leray_project(s.v).v;
  path.states.push_back(s);
  const double dt = T / N;
  for (int k = 0; k < N; ++k) {
    const int m = std::max(substeps, static_cast<int>(std::ceil(dt / stable_dt(s, visc) - 1e-9)));
    const double h = dt / m;
    for (int j = 0; j < m; ++j) {
      s = s.eos.incompressible() ? step_incompressible(s, h, visc, G) : step_compressible(s, h, visc, G);
    }
    s.t = (k + 1) * dt;
    path.states.push_back(s);
  }
  return path;
}

void add_solenoidal_noise(Path& path, double fraction, std::uint64_t seed) {
  Rng rng(seed);
  for (std::size_t k = 1; k < path.states.size(); ++k) {
    const VectorField noise = random_solenoidal(path.grid(), rng);
    const double target = fraction * norm_l2(path.states[k].v);
    const double size = norm_l2(noise);
    if (size > 0.0) path.states[k].v.axpy(target / size, noise);
  }
}

}  // namespace sben
