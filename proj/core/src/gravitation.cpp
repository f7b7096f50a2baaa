#include "sben/gravitation.hpp"

#include <cmath>
#include <numbers>

namespace sben {

Gravitation Gravitation::zero() { return {Preset::zero, {}}; }

Gravitation Gravitation::uniform_gravity(double g0) {
  Params p;
  p.g0 = g0;
  return {Preset::uniform_gravity, p};
}

Gravitation Gravitation::rigid_rotation(double omega) {
  Params p;
  p.omega = omega;
  return {Preset::rigid_rotation, p};
}

Gravitation Gravitation::periodic_potentials(double phi_amp, double a_amp, double frequency) {
  Params p;
  p.phi_amp = phi_amp;
  p.a_amp = a_amp;
  p.frequency = frequency;
  return {Preset::periodic_potentials, p};
}

Gravitation Gravitation::from_preset(std::string_view id, const std::map<std::string, double>& params) {
  auto take = [&](const char* name, double fallback) {
    auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
  };
  auto allow_only = [&](std::initializer_list<const char*> names) {
    for (const auto& [key, value] : params) {
      bool known = false;
      for (const char* n : names) known = known || key == n;
      if (!known) throw ConfigError("gravitation.parameters." + key, "unknown parameter for preset " + std::string(id));
    }
  };
  if (id == "zero") {
    allow_only({});
    return zero();
  }
  if (id == "uniform_gravity") {
    allow_only({"g0"});
    return uniform_gravity(take("g0", 9.81));
  }
  if (id == "rigid_rotation") {
    allow_only({"omega"});
    return rigid_rotation(take("omega", 1.0));
  }
  if (id == "periodic_potentials") {
    allow_only({"phi_amp", "a_amp", "frequency"});
    return periodic_potentials(take("phi_amp", 0.0), take("a_amp", 0.0), take("frequency", 0.0));
  }
  throw ConfigError("gravitation.preset", "unknown preset '" + std::string(id) + "'");
}

std::string_view Gravitation::preset_id() const {
  switch (preset_) {
    case Preset::zero: return "zero";
    case Preset::uniform_gravity: return "uniform_gravity";
    case Preset::rigid_rotation: return "rigid_rotation";
    case Preset::periodic_potentials: return "periodic_potentials";
  }
  return "zero";
}

bool Gravitation::periodic() const {
  return preset_ == Preset::zero || preset_ == Preset::periodic_potentials;
}

namespace {

double kx_of(const Grid2P& g) { return 2.0 * std::numbers::pi / g.lx; }
double ky_of(const Grid2P& g) { return 2.0 * std::numbers::pi / g.ly; }

}  // namespace

double Gravitation::phi(double t, double x, double y, const Grid2P& g) const {
  switch (preset_) {
    case Preset::uniform_gravity: return params_.g0 * y;
    case Preset::periodic_potentials:
      return params_.phi_amp * std::cos(kx_of(g) * x) * std::cos(ky_of(g) * y) * std::cos(params_.frequency * t);
    default: return 0.0;
  }
}

double Gravitation::dphi_dt(double t, double x, double y, const Grid2P& g) const {
  if (preset_ != Preset::periodic_potentials) return 0.0;
  return -params_.phi_amp * params_.frequency * std::cos(kx_of(g) * x) * std::cos(ky_of(g) * y) *
         std::sin(params_.frequency * t);
}

std::array<double, 3> Gravitation::vector_potential(double t, double x, double y, const Grid2P& g) const {
  switch (preset_) {
    case Preset::rigid_rotation: return {-params_.omega * y, params_.omega * x, 0.0};
    case Preset::periodic_potentials: {
      const double s = params_.a_amp * (1.0 + 0.5 * std::sin(params_.frequency * t));
      return {s * std::sin(ky_of(g) * y), s * std::sin(kx_of(g) * x), 0.0};
    }
    default: return {0.0, 0.0, 0.0};
  }
}

std::array<double, 3> Gravitation::dA_dt(double t, double x, double y, const Grid2P& g) const {
  if (preset_ != Preset::periodic_potentials) return {0.0, 0.0, 0.0};
  const double ds = params_.a_amp * 0.5 * params_.frequency * std::cos(params_.frequency * t);
  return {ds * std::sin(ky_of(g) * y), ds * std::sin(kx_of(g) * x), 0.0};
}

std::array<double, 3> Gravitation::omega_exact(double t, double x, double y, const Grid2P& g) const {
  switch (preset_) {
    case Preset::rigid_rotation: return {0.0, 0.0, params_.omega};
    case Preset::periodic_potentials: {
      const double s = params_.a_amp * (1.0 + 0.5 * std::sin(params_.frequency * t));
      const double curl_z = s * (kx_of(g) * std::cos(kx_of(g) * x) - ky_of(g) * std::cos(ky_of(g) * y));
      return {0.0, 0.0, 0.5 * curl_z};
    }
    default: return {0.0, 0.0, 0.0};
  }
}

std::array<double, 3> Gravitation::gravity_exact(double t, double x, double y, const Grid2P& g) const {
  const auto da = dA_dt(t, x, y, g);
  switch (preset_) {
    case Preset::uniform_gravity: return {0.0, -params_.g0, 0.0};
    case Preset::periodic_potentials: {
      const double c = params_.phi_amp * std::cos(params_.frequency * t);
      const double kx = kx_of(g);
      const double ky = ky_of(g);
      return {c * kx * std::sin(kx * x) * std::cos(ky * y) - da[0],
              c * ky * std::cos(kx * x) * std::sin(ky * y) - da[1], -da[2]};
    }
    default: return {0.0, 0.0, 0.0};
  }
}

ScalarField Gravitation::sample_phi(const Grid2P& g, double t) const {
  return ScalarField::sample(g, [&](double x, double y) { return std::array<double, 1>{phi(t, x, y, g)}; });
}

ScalarField Gravitation::sample_dphi_dt(const Grid2P& g, double t) const {
  return ScalarField::sample(g, [&](double x, double y) { return std::array<double, 1>{dphi_dt(t, x, y, g)}; });
}

VectorField Gravitation::sample_A(const Grid2P& g, double t) const {
  return VectorField::sample(g, [&](double x, double y) { return vector_potential(t, x, y, g); });
}

VectorField Gravitation::sample_dA_dt(const Grid2P& g, double t) const {
  return VectorField::sample(g, [&](double x, double y) { return dA_dt(t, x, y, g); });
}

VectorField Gravitation::grad_phi(const Grid2P& g, double t) const {
  const double hx = g.dx();
  const double hy = g.dy();
  return VectorField::sample(g, [&](double x, double y) {
    return std::array<double, 3>{(phi(t, x + hx, y, g) - phi(t, x - hx, y, g)) / (2.0 * hx),
                                 (phi(t, x, y + hy, g) - phi(t, x, y - hy, g)) / (2.0 * hy), 0.0};
  });
}

TensorField Gravitation::grad_A(const Grid2P& g, double t) const {
  const double hx = g.dx();
  const double hy = g.dy();
  return TensorField::sample(g, [&](double x, double y) {
    const auto xp = vector_potential(t, x + hx, y, g);
    const auto xm = vector_potential(t, x - hx, y, g);
    const auto yp = vector_potential(t, x, y + hy, g);
    const auto ym = vector_potential(t, x, y - hy, g);
    std::array<double, 9> out{};
    for (std::size_t a = 0; a < 3; ++a) {
      out[3 * a + 0] = (xp[a] - xm[a]) / (2.0 * hx);
      out[3 * a + 1] = (yp[a] - ym[a]) / (2.0 * hy);
    }
    return out;
  });
}

VectorField eval_gravity(const Gravitation& G, const Grid2P& grid, double t) {
  VectorField g(grid);
  if (G.is_zero()) return g;
  g -= G.grad_phi(grid, t);
  g -= G.sample_dA_dt(grid, t);
  return g;
}

VectorField eval_coriolis_vector(const Gravitation& G, const Grid2P& grid, double t) {
  VectorField omega(grid);
  if (G.is_zero()) return omega;
  const TensorField ga = G.grad_A(grid, t);
  for (std::size_t k = 0; k < grid.cells(); ++k) {
    // curl with d/dz == 0: (dAz/dy, -dAz/dx, dAy/dx - dAx/dy)
    omega.at(0, k) = 0.5 * ga.at(3 * 2 + 1, k);
    omega.at(1, k) = -0.5 * ga.at(3 * 2 + 0, k);
    omega.at(2, k) = 0.5 * (ga.at(3 * 1 + 0, k) - ga.at(3 * 0 + 1, k));
  }
  return omega;
}

VectorField gravitation_force(const ScalarField& rho, const VectorField& v, const Gravitation& G, double t) {
  require_same_grid(rho.grid(), v.grid());
  VectorField f = eval_gravity(G, v.grid(), t);
  if (!G.is_zero()) f.axpy(-2.0, cross(eval_coriolis_vector(G, v.grid(), t), v));
  return scale(rho, f);
}

}  // namespace sben
