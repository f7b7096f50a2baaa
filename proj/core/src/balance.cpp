#include "sben/balance.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace sben {

Eos Eos::incompressible(double rho0) {
  if (!(rho0 > 0.0)) throw ConfigError("eos.rho0", "must be positive");
  Eos e;
  e.kind_ = Kind::incompressible;
  e.rho0_ = rho0;
  return e;
}

Eos Eos::barotropic_power(double p0, double rho0, double gamma) {
  if (!(p0 > 0.0)) throw ConfigError("eos.p0", "must be positive");
  if (!(rho0 > 0.0)) throw ConfigError("eos.rho0", "must be positive");
  if (!(gamma >= 1.0)) throw ConfigError("eos.gamma", "must be >= 1");
  Eos e;
  e.kind_ = Kind::barotropic_power;
  e.p0_ = p0;
  e.rho0_ = rho0;
  e.gamma_ = gamma;
  return e;
}

double Eos::pressure(double rho) const {
  if (incompressible()) throw Error("incompressible equation of state has no pressure law; supply the pressure field");
  return p0_ * std::pow(rho / rho0_, gamma_);
}

double Eos::dpressure_drho(double rho) const {
  if (incompressible()) throw Error("incompressible equation of state has no pressure law");
  return gamma_ * p0_ / rho0_ * std::pow(rho / rho0_, gamma_ - 1.0);
}

double Eos::internal_energy(double rho) const {
  if (incompressible()) return 0.0;
  if (gamma_ == 1.0) return p0_ / rho0_ * std::log(rho / rho0_);
  return pressure(rho) / (rho * (gamma_ - 1.0));
}

double Eos::sound_speed(double rho) const {
  if (incompressible()) return std::numeric_limits<double>::infinity();
  return std::sqrt(dpressure_drho(rho));
}

ScalarField Eos::pressure(const ScalarField& rho) const {
  ScalarField p(rho.grid());
  for (std::size_t k = 0; k < rho.cells(); ++k) p.at(0, k) = pressure(rho.at(0, k));
  return p;
}

void validate_state(const FluidState& s) {
  require_same_grid(s.v.grid(), s.rho.grid());
  for (double r : s.rho.values()) {
    if (!(r > 0.0)) throw NumericalError("density must stay positive (found " + std::to_string(r) + ")");
  }
}

Momentum momentum(const FluidState& s, const Gravitation& G) {
  VectorField u = s.v;
  if (!G.is_zero()) u += G.sample_A(s.grid(), s.t);
  return {scale(s.rho, u)};
}

IntervalMidpoint midpoint(const FluidState& prev, const FluidState& next) {
  require_same_grid(prev.grid(), next.grid());
  IntervalMidpoint m;
  m.dt = next.t - prev.t;
  if (!(m.dt > 0.0)) throw Error("interval length must be positive");
  m.t_mid = 0.5 * (prev.t + next.t);
  m.v = 0.5 * (prev.v + next.v);
  m.rho = 0.5 * (prev.rho + next.rho);
  return m;
}

ScalarField mass_residual(const FluidState& prev, const FluidState& next) {
  const IntervalMidpoint m = midpoint(prev, next);
  ScalarField r = (1.0 / m.dt) * (next.rho - prev.rho);
  r += div_vector(scale(m.rho, m.v));
  return r;
}

VectorField material_derivative(const FluidState& prev, const FluidState& next) {
  const IntervalMidpoint m = midpoint(prev, next);
  VectorField a = (1.0 / m.dt) * (next.v - prev.v);
  a += advect(m.v, m.v);
  return a;
}

ScalarField interval_pressure(const FluidState& prev, const FluidState& next) {
  return 0.5 * (prev.pressure() + next.pressure());
}

VectorField pi_I_residual(const FluidState& prev, const FluidState& next, const Gravitation& G) {
  return pi_I_residual(prev, next, G, interval_pressure(prev, next));
}

VectorField pi_I_residual(const FluidState& prev, const FluidState& next, const Gravitation& G,
                          const ScalarField& pressure) {
  const IntervalMidpoint m = midpoint(prev, next);
  VectorField r = scale(m.rho, material_derivative(prev, next));
  r += grad_scalar(pressure);
  if (!G.is_zero()) r -= gravitation_force(m.rho, m.v, G, m.t_mid);
  return r;
}

VectorField reduced_momentum_residual(const FluidState& prev, const FluidState& next, const Gravitation& G,
                                      const ScalarField& pressure) {
  return -pi_I_residual(prev, next, G, pressure);
}

namespace {

void require_periodic(const Gravitation& G, const char* what) {
  if (!G.periodic()) {
    throw ConfigError("gravitation.preset", std::string(what) + " needs periodic potentials; preset '" +
                                                std::string(G.preset_id()) + "' is not periodic");
  }
}

ScalarField pressure_or_zero(const FluidState& prev, const FluidState& next) {
  if (prev.eos.incompressible()) return ScalarField(prev.grid());
  return interval_pressure(prev, next);
}

}  // namespace

VectorField raw_momentum_residual(const FluidState& prev, const FluidState& next, const Momentum& pi_prev,
                                  const Momentum& pi_next, const Gravitation& G, const ScalarField& pressure) {
  require_periodic(G, "raw momentum residual");
  const IntervalMidpoint m = midpoint(prev, next);
  const Grid2P& g = m.v.grid();
  const VectorField pi_mid = 0.5 * (pi_prev.pi + pi_next.pi);

  VectorField r = (-1.0 / m.dt) * (pi_next.pi - pi_prev.pi);
  r -= grad_scalar(pressure);
  // div(v (x) pi): d_j (v_j pi_i), assembled via the x and y flux columns.
  for (std::size_t i = 0; i < 3; ++i) {
    VectorField flux(g);
    for (std::size_t k = 0; k < g.cells(); ++k) {
      flux.at(0, k) = m.v.at(0, k) * pi_mid.at(i, k);
      flux.at(1, k) = m.v.at(1, k) * pi_mid.at(i, k);
    }
    const ScalarField d = div_vector(flux);
    for (std::size_t k = 0; k < g.cells(); ++k) r.at(i, k) -= d.at(0, k);
  }
  if (!G.is_zero()) {
    const TensorField ga = G.grad_A(g, m.t_mid);
    const VectorField gphi = G.grad_phi(g, m.t_mid);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < g.cells(); ++k) {
        double ga_t_v = 0.0;  // sum_j d_i A_j v_j
        for (std::size_t j = 0; j < 3; ++j) ga_t_v += ga.at(3 * j + i, k) * m.v.at(j, k);
        r.at(i, k) += m.rho.at(0, k) * (ga_t_v - gphi.at(i, k));
      }
    }
  }
  return r;
}

VectorField raw_momentum_residual(const FluidState& prev, const FluidState& next, const Momentum& pi_prev,
                                  const Momentum& pi_next, const Gravitation& G) {
  return raw_momentum_residual(prev, next, pi_prev, pi_next, G, interval_pressure(prev, next));
}

VectorField momentum_form_gap(const FluidState& prev, const FluidState& next, const Gravitation& G) {
  require_periodic(G, "momentum form gap");
  const ScalarField p = pressure_or_zero(prev, next);
  const IntervalMidpoint m = midpoint(prev, next);
  VectorField gap = raw_momentum_residual(prev, next, momentum(prev, G), momentum(next, G), G, p);
  gap -= reduced_momentum_residual(prev, next, G, p);
  VectorField v_plus_a = m.v;
  if (!G.is_zero()) v_plus_a += G.sample_A(m.v.grid(), m.t_mid);
  gap += scale(mass_residual(prev, next), v_plus_a);
  return gap;
}

ScalarField energy_residual(const FluidState& prev, const FluidState& next, const Momentum& pi_prev,
                            const Momentum& pi_next, const Gravitation& G, const ScalarField& pressure) {
  require_periodic(G, "energy residual");
  const IntervalMidpoint m = midpoint(prev, next);
  const Grid2P& g = m.v.grid();

  auto hamiltonian = [&](const FluidState& s, const Momentum& pi) {
    const VectorField a = G.sample_A(g, s.t);
    const ScalarField phi = G.sample_phi(g, s.t);
    ScalarField h(g);
    for (std::size_t k = 0; k < g.cells(); ++k) {
      const double rho = s.rho.at(0, k);
      double kin = 0.0;
      for (std::size_t c = 0; c < 3; ++c) {
        const double u = pi.pi.at(c, k) - rho * a.at(c, k);
        kin += u * u;
      }
      h.at(0, k) = 0.5 * kin / rho + rho * (phi.at(0, k) + s.eos.internal_energy(rho));
    }
    return h;
  };

  const ScalarField h_prev = hamiltonian(prev, pi_prev);
  const ScalarField h_next = hamiltonian(next, pi_next);
  ScalarField r = (1.0 / m.dt) * (h_next - h_prev);
  const ScalarField h_mid = 0.5 * (h_prev + h_next);
  r += div_vector(scale(h_mid + pressure, m.v));
  if (!G.is_zero()) {
    const ScalarField dphi = G.sample_dphi_dt(g, m.t_mid);
    const VectorField da = G.sample_dA_dt(g, m.t_mid);
    const ScalarField da_v = dot(da, m.v);
    for (std::size_t k = 0; k < g.cells(); ++k) {
      r.at(0, k) -= m.rho.at(0, k) * (dphi.at(0, k) - da_v.at(0, k));
    }
  }
  return r;
}

ScalarField energy_residual(const FluidState& prev, const FluidState& next, const Momentum& pi_prev,
                            const Momentum& pi_next, const Gravitation& G) {
  return energy_residual(prev, next, pi_prev, pi_next, G, interval_pressure(prev, next));
}

}  // namespace sben
