#include <gtest/gtest.h>

#include <algorithm>

#include "common.hpp"
#include "sben/minimize.hpp"
#include "sben/oracle.hpp"

using namespace sben;
using sben::test::box;

namespace {

const SbenProblem kProb{Viscosity(0.1), Gravitation::zero(), {}, 1};

Path noisy_tg(int n, int N, std::uint64_t seed) {
  Path p = reference_path(case_initial_state({}, box(n), Eos::incompressible(1.0)), 0.5, N, 4, kProb.visc, kProb.G);
  add_solenoidal_noise(p, 0.1, seed);
  return p;
}

}  // namespace

TEST(Minimize, DecreasesPiMonotonicallyAndPinsTheStart) {
  const Path start = noisy_tg(8, 3, 1);
  MinimizeOptions opt;
  opt.max_iter = 60;
  const MinimizeResult res = minimize(start, kProb, opt);
  const auto& h = res.report.pi_history;
  ASSERT_GE(h.size(), 2u);
  for (std::size_t i = 1; i < h.size(); ++i) EXPECT_LE(h[i], h[i - 1]);
  EXPECT_GT(h.front() / res.report.pi, 10.0);
  EXPECT_EQ(norm_max(res.path.states[0].v - start.states[0].v), 0.0);
  for (const FluidState& s : res.path.states) EXPECT_LT(norm_max(div_vector(s.v)), 1e-11);
  EXPECT_EQ(res.report.pressure.size(), 3u);
  EXPECT_EQ(res.path.pressure.size(), 3u);
}

TEST(Minimize, HoldsKernelContentOfFreeSlices) {
  Path start = noisy_tg(8, 2, 2);
  for (std::size_t k = 1; k < start.states.size(); ++k) {
    for (std::size_t c = 0; c < start.grid().cells(); ++c) start.states[k].v.at(0, c) += 0.2;
  }
  MinimizeOptions opt;
  opt.max_iter = 30;
  const MinimizeResult res = minimize(start, kProb, opt);
  for (std::size_t k = 1; k < start.states.size(); ++k) {
    EXPECT_NEAR(mean(res.path.states[k].v)[0], mean(start.states[k].v)[0], 1e-12);
  }
}

TEST(Minimize, IsDeterministic) {
  const Path start = noisy_tg(8, 2, 3);
  MinimizeOptions opt;
  opt.max_iter = 15;
  const MinimizeResult a = minimize(start, kProb, opt);
  const MinimizeResult b = minimize(start, kProb, opt);
  EXPECT_EQ(a.report.pi, b.report.pi);
  EXPECT_EQ(a.report.iterations, b.report.iterations);
}

TEST(Minimize, StatusNames) {
  EXPECT_STREQ(to_string(MinimizeStatus::converged_pi), "converged_pi");
  EXPECT_STREQ(to_string(MinimizeStatus::max_iterations), "max_iterations");
}

TEST(Minimize, CompressibleDescentIsExperimentalButDescends) {
  CaseSpec c;
  c.id = "compressible_smooth";
  c.amplitude = 0.05;
  Path start = reference_path(case_initial_state(c, box(8), Eos::barotropic_power(1.0, 1.0, 1.4)), 0.2, 2, 4,
                              kProb.visc, kProb.G);
  add_solenoidal_noise(start, 0.1, 4);
  slave_density(start);
  MinimizeOptions opt;
  opt.max_iter = 20;
  const MinimizeResult res = minimize(start, kProb, opt);
  EXPECT_LT(res.report.pi, res.report.pi_history.front());
  const double m0 = integrate(start.states[0].rho);
  for (const FluidState& s : res.path.states) EXPECT_NEAR(integrate(s.rho), m0, 1e-11 * m0);
}
