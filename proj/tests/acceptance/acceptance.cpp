// Acceptance gate: one PASS/FAIL line per criterion, exit status nonzero if
// any criterion fails. Tolerances are pinned here and nowhere else.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "sben/minimize.hpp"
#include "sben/oracle.hpp"
#include "sben/random_fields.hpp"
#include "sben/symplectic.hpp"

using namespace sben;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Grid2P box(int n) { return Grid2P(n, n, kTwoPi, kTwoPi); }

Path taylor_green_path(int n, int N, double mu) {
  const Viscosity visc(mu);
  CaseSpec c;
  c.id = "taylor_green";
  c.amplitude = 1.0;
  const FluidState init = case_initial_state(c, box(n), Eos::incompressible(1.0));
  return reference_path(init, 1.0, N, 4, visc, Gravitation::zero());
}

double max_ns(const SbenReport& r) {
  double m = 0.0;
  for (const IntervalTerms& t : r.intervals) m = std::max(m, t.ns_residual_max);
  return m;
}

// Results shared between criteria 3/4 and 5/8.
struct Shared {
  std::vector<SbenReport> tg_reports;
  std::vector<Path> tg_paths;
  double eps_ns = -1.0;
  double min_ns = -1.0;
  bool have_min = false;
} shared;

Outcome fenchel_inequality() {
  const Grid2P g = box(32);
  const Viscosity visc(0.1);
  const ConjugateSolve conj{};
  Rng rng(kSeed);
  double lowest = 1e300;
  int violations = 0;
  for (int r = 0; r < 100; ++r) {
    const VectorField v = random_smooth_vector(g, rng);
    VectorField f = random_smooth_vector(g, rng);
    remove_null_modes(f);
    const double gap = fenchel_gap(v, f, visc, conj);
    const double scale = phi(v, visc) + phi_star(f, visc, conj) + 1.0;
    if (gap < -1e-12 * scale) ++violations;
    lowest = std::min(lowest, gap / scale);
  }
  return {violations == 0, fmt("100 pairs on 32^2, violations %d, min gap / scale %.3e", violations, lowest)};
}

Outcome conjugacy_equality() {
  const Grid2P g = box(32);
  const Viscosity visc(0.1);
  ConjugateSolve conj{};
  Rng rng(kSeed + 1);
  double worst = 0.0;
  for (int r = 0; r < 50; ++r) {
    const VectorField v = random_smooth_vector(g, rng);
    const double p = phi(v, visc);
    worst = std::max(worst, std::abs(phi_star(apply_K(v, visc), visc, conj) - p) / p);
  }
  // Taylor-Green: K v = 2 mu v in the continuum; the central stencils give
  // 2 mu (sin h / h)^2 v exactly.
  const VectorField tg = taylor_green_analytic(0.0, 0.0, g).state.v;
  const double h = g.dx();
  const double s2 = std::pow(std::sin(h) / h, 2);
  const VectorField Ktg = apply_K(tg, visc);
  const double discrete = norm_max(Ktg - (2.0 * visc.mu * s2) * tg) / (2.0 * visc.mu);
  const double continuum = norm_max(Ktg - (2.0 * visc.mu) * tg) / (2.0 * visc.mu);
  const double ptg = phi(tg, visc);
  const double tg_conj = std::abs(phi_star(Ktg, visc, conj) - ptg) / ptg;
  const bool ok = worst <= 1e-8 && tg_conj <= 1e-8 && discrete <= 1e-12 && continuum <= h * h;
  return {ok, fmt("random max rel %.3e, TG rel %.3e, TG eigen residual %.1e (continuum %.2e <= h^2 %.2e)", worst,
                  tg_conj, discrete, continuum, h * h)};
}

Outcome zero_minimum() {
  const SbenProblem prob{Viscosity(0.1), Gravitation::zero(), {}, 0};
  std::vector<double> pis;
  for (auto [n, N] : {std::pair{16, 25}, {32, 50}, {64, 100}}) {
    Path p = taylor_green_path(n, N, 0.1);
    SbenReport r = assemble_pi(p, prob);
    pis.push_back(r.pi);
    shared.tg_reports.push_back(std::move(r));
    shared.tg_paths.push_back(std::move(p));
  }
  const double o1 = std::log2(pis[0] / pis[1]);
  const double o2 = std::log2(pis[1] / pis[2]);
  const double rel = pis[2] / shared.tg_reports[2].phi_integral;
  const bool ok = pis[1] < pis[0] && pis[2] < pis[1] && o1 >= 1.8 && o2 >= 1.8 && rel <= 1e-3;
  return {ok, fmt("Pi %.3e / %.3e / %.3e, orders %.2f %.2f, Pi/int(phi) at 64^2 %.2e", pis[0], pis[1], pis[2], o1, o2,
                  rel)};
}

Outcome positivity() {
  const SbenProblem prob{Viscosity(0.1), Gravitation::zero(), {}, 0};
  const Path& base = shared.tg_paths.at(1);
  const double pi0 = shared.tg_reports.at(1).pi;
  Path q = base;
  for (std::size_t k = 1; k < q.states.size(); ++k) q.states[k].v *= 1.1;
  const double pi1 = assemble_pi(q, prob).pi;
  return {pi1 >= 10.0 * pi0, fmt("32^2: Pi %.3e -> %.3e (ratio %.2e)", pi0, pi1, pi1 / pi0)};
}

Outcome minimization() {
  const SbenProblem prob{Viscosity(0.1), Gravitation::zero(), {}, 1};
  const Path ref = taylor_green_path(16, 8, 0.1);
  shared.eps_ns = max_ns(assemble_pi(ref, prob));
  Path start = ref;
  add_solenoidal_noise(start, 0.1, kSeed);
  const MinimizeResult res = minimize(start, prob);
  shared.min_ns = max_ns(res.report);
  shared.have_min = true;
  const double reduction = res.report.pi_history.front() / res.report.pi;
  const double dist = path_distance(res.path, ref);
  return {reduction >= 10.0 && dist <= 0.05,
          fmt("Pi %.3e -> %.3e (x%.2e) in %d iterations [%s], distance to oracle %.2e (start %.2e)",
              res.report.pi_history.front(), res.report.pi, reduction, res.report.iterations,
              res.report.status.c_str(), dist, path_distance(start, ref))};
}

double directional_fd(const Path& base, const std::vector<VectorField>& d, const SbenProblem& prob, double h) {
  auto eval = [&](double s) {
    Path p = base;
    for (std::size_t k = 0; k < d.size(); ++k) p.states[k + 1].v.axpy(s, d[k]);
    if (!p.incompressible()) slave_density(p);
    return assemble_pi(p, prob).pi;
  };
  auto central = [&](double s) { return (eval(s) - eval(-s)) / (2.0 * s); };
  // Richardson extrapolation of the central difference removes the O(h^2) term.
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

double gradient_error(const Path& base, const SbenProblem& prob, Rng& rng) {
  const PathGradient pg = gradient_pi(base, prob);
  std::vector<VectorField> d;
  for (std::size_t k = 1; k < base.states.size(); ++k) {
    d.push_back(base.incompressible() ? random_solenoidal(base.grid(), rng) : random_smooth_vector(base.grid(), rng));
  }
  double adj = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) adj += inner(pg.dv[k], d[k]);
  const double fd = directional_fd(base, d, prob, 1e-4);
  return std::abs(fd - adj) / std::abs(fd);
}

Outcome gradient() {
  const Grid2P g = box(8);
  const Viscosity visc(0.1);
  const ConjugateSolve conj{1e-13, 5000, 1e-8};
  Rng rng(kSeed);
  double inc = 0.0, comp = 0.0;
  {
    const SbenProblem prob{visc, Gravitation::rigid_rotation(0.7), conj, 1};
    const FluidState init = case_initial_state({}, g, Eos::incompressible(1.0));
    Path base = reference_path(init, 1.0, 4, 4, visc, prob.G);
    add_solenoidal_noise(base, 0.1, kSeed);
    for (int r = 0; r < 5; ++r) inc = std::max(inc, gradient_error(base, prob, rng));
  }
  {
    const SbenProblem prob{visc, Gravitation::periodic_potentials(0.3, 0.2, 1.0), conj, 1};
    CaseSpec c;
    c.id = "compressible_smooth";
    c.amplitude = 0.05;
    const FluidState init = case_initial_state(c, g, Eos::barotropic_power(1.0, 1.0, 1.4));
    Path base = reference_path(init, 0.4, 4, 4, visc, prob.G);
    add_solenoidal_noise(base, 0.05, kSeed);
    slave_density(base);
    for (int r = 0; r < 5; ++r) comp = std::max(comp, gradient_error(base, prob, rng));
  }
  return {inc <= 1e-5 && comp <= 1e-5,
          fmt("8^2, N = 4, 5 directions: incompressible max rel %.2e, compressible max rel %.2e", inc, comp)};
}

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

Outcome momentum_form() {
  const Gravitation G = Gravitation::periodic_potentials(0.3, 0.2, 1.0);
  std::vector<double> e;
  for (int n : {32, 64}) {
    const Grid2P g = box(n);
    const double dt = g.dx() / 4.0;
    e.push_back(norm_max(momentum_form_gap(manufactured(g, 0.3), manufactured(g, 0.3 + dt), G)));
  }
  const double order = std::log2(e[0] / e[1]);
  return {order >= 1.8, fmt("max gap %.3e (32^2) %.3e (64^2), order %.2f", e[0], e[1], order)};
}

Outcome ns_recovery() {
  if (!shared.have_min) return {false, "criterion 5 did not produce a minimized path"};
  const double ratio = shared.min_ns / shared.eps_ns;
  return {ratio <= 10.0, fmt("max NS residual %.3e vs oracle estimate %.3e (ratio %.2f)", shared.min_ns,
                             shared.eps_ns, ratio)};
}

Outcome structure() {
  const Grid2P g = box(32);
  const Viscosity visc(0.1);
  Rng rng(kSeed + 9);
  double anti = 0.0, bil = 0.0;
  for (int r = 0; r < 100; ++r) {
    const PhasePoint a{random_smooth_vector(g, rng), random_smooth_vector(g, rng)};
    const PhasePoint b{random_smooth_vector(g, rng), random_smooth_vector(g, rng)};
    const PhasePoint c{random_smooth_vector(g, rng), random_smooth_vector(g, rng)};
    const double na = std::hypot(norm_l2(a.v), norm_l2(a.pidot));
    const double nb = std::hypot(norm_l2(b.v), norm_l2(b.pidot));
    const double nc = std::hypot(norm_l2(c.v), norm_l2(c.pidot));
    anti = std::max(anti, std::abs(omega(a, b) + omega(b, a)) / (na * nb));
    const PhasePoint mix{-1.3 * a.v + c.v, -1.3 * a.pidot + c.pidot};
    bil = std::max(bil, std::abs(omega(mix, b) + 1.3 * omega(a, b) - omega(c, b)) / ((1.3 * na + nc) * nb));
  }
  const VectorField v = random_smooth_vector(g, rng);
  const SymTensorField s = sigma_I(sym_grad(v), visc.mu);
  const double tr = norm_max(trace(s)) / norm_max(s);
  double cor = 0.0;
  for (const Gravitation& G : {Gravitation::rigid_rotation(0.7), Gravitation::periodic_potentials(0.3, 0.2, 1.0)}) {
    const VectorField Om = eval_coriolis_vector(G, g, 0.4);
    cor = std::max(cor, norm_max(dot(v, cross(Om, v))) / (norm_max(Om) * std::pow(norm_max(v), 2)));
  }
  const VectorField p1 = leray_project(v).v;
  const double idem = norm_l2(leray_project(p1).v - p1) / norm_l2(p1);
  const bool ok = anti <= 1e-12 && bil <= 1e-12 && tr <= 1e-14 && cor <= 1e-12 && idem <= 1e-10;
  return {ok, fmt("omega anti %.1e bilin %.1e, Tr sigma %.1e, Coriolis power %.1e, Leray idempotence %.1e", anti, bil,
                  tr, cor, idem)};
}

Outcome compressible() {
  const Viscosity visc(0.1);
  const SbenProblem prob{visc, Gravitation::zero(), {}, 0};
  std::vector<double> pis;
  double drift = 0.0;
  for (auto [n, N] : {std::pair{16, 25}, {32, 50}, {64, 100}}) {
    CaseSpec c;
    c.id = "compressible_smooth";
    c.amplitude = 0.01;
    const FluidState init = case_initial_state(c, box(n), Eos::barotropic_power(1.0, 1.0, 1.4));
    const Path p = reference_path(init, 1.0, N, 4, visc, prob.G);
    pis.push_back(assemble_pi(p, prob).pi);
    const double m0 = integrate(p.states.front().rho);
    for (const FluidState& s : p.states) drift = std::max(drift, std::abs(integrate(s.rho) - m0) / m0);
  }
  const double o1 = std::log2(pis[0] / pis[1]);
  const double o2 = std::log2(pis[1] / pis[2]);
  const bool ok = pis[1] < pis[0] && pis[2] < pis[1] && o1 >= 1.5 && o2 >= 1.5 && drift <= 1e-13;
  return {ok, fmt("Pi %.3e / %.3e / %.3e, orders %.2f %.2f, relative mass drift %.1e", pis[0], pis[1], pis[2], o1, o2,
                  drift)};
}

Outcome bernoulli() {
  // Steady inviscid Taylor-Green with its analytic pressure. The estimate is
  // the Cauchy-Schwarz bound on the pairing, ||pi_I|| ||v_mid||.
  std::vector<double> eps;
  double worst = 0.0;
  bool within = true;
  for (int n : {16, 32, 64}) {
    const Grid2P g = box(n);
    const AnalyticState a = taylor_green_analytic(0.0, 0.0, g);
    FluidState next = a.state;
    next.t = 0.1;
    const VectorField pi_I = pi_I_residual(a.state, next, Gravitation::zero(), a.pressure);
    const double pairing = inner(pi_I, midpoint(a.state, next).v);
    const double e = norm_l2(pi_I) * norm_l2(a.state.v);
    within = within && std::abs(pairing) <= e;
    worst = std::max(worst, std::abs(pairing));
    eps.push_back(e);
  }
  const double o1 = std::log2(eps[0] / eps[1]);
  const double o2 = std::log2(eps[1] / eps[2]);
  return {within && o1 >= 1.8 && o2 >= 1.8,
          fmt("max |pairing| %.2e, estimates %.3e / %.3e / %.3e, orders %.2f %.2f", worst, eps[0], eps[1], eps[2], o1,
              o2)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Fenchel inequality", 60, fenchel_inequality},
      {2, "conjugacy equality", 60, conjugacy_equality},
      {3, "zero minimum on oracle paths", 300, zero_minimum},
      {4, "positivity off the manifold", 120, positivity},
      {5, "minimization recovers the flow", 600, minimization},
      {6, "gradient vs finite differences", 120, gradient},
      {7, "momentum form identity", 60, momentum_form},
      {8, "Navier-Stokes recovery", 600, ns_recovery},
      {9, "structure checks", 600, structure},
      {10, "compressible evaluation", 300, compressible},
      {11, "Bernoulli limit", 600, bernoulli},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.pass && secs <= c.budget_s;
    if (!pass) ++failed;
    std::printf("[%s] %2d %-32s %s (%.1f s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
