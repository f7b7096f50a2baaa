#include <gtest/gtest.h>

#include "common.hpp"
#include "sben/oracle.hpp"

using namespace sben;
using sben::test::box;

TEST(Oracle, TaylorGreenAnalyticIsDivergenceFreeAndDecays) {
  const Grid2P g = box(16);
  const AnalyticState a = taylor_green_analytic(0.0, 0.1, g);
  const AnalyticState b = taylor_green_analytic(1.0, 0.1, g);
  EXPECT_LT(norm_max(div_vector(a.state.v)), 1e-14);
  EXPECT_NEAR(norm_l2(b.state.v) / norm_l2(a.state.v), std::exp(-0.2), 1e-14);
  EXPECT_THROW(taylor_green_analytic(0.0, 0.1, Grid2P(16, 16, 1.0, 1.0)), ConfigError);
}

TEST(Oracle, ReferencePathConvergesToTaylorGreen) {
  auto err = [](int n) {
    const Grid2P g = box(n);
    const Path p =
        reference_path(case_initial_state({}, g, Eos::incompressible(1.0)), 1.0, 10, 4, Viscosity(0.1), Gravitation::zero());
    return norm_max(p.states.back().v - taylor_green_analytic(1.0, 0.1, g).state.v);
  };
  const double e16 = err(16), e32 = err(32);
  EXPECT_GT(std::log2(e16 / e32), 1.8);
}

TEST(Oracle, EnergyDecreasesWithoutForcing) {
  CaseSpec c;
  c.id = "shear_decay";
  const Path p = reference_path(case_initial_state(c, box(16), Eos::incompressible(1.0)), 1.0, 10, 4,
                                Viscosity(0.05), Gravitation::zero());
  for (int k = 0; k < p.intervals(); ++k) EXPECT_LT(norm_l2(p.states[k + 1].v), norm_l2(p.states[k].v));
}

TEST(Oracle, CompressibleStepConservesMass) {
  CaseSpec c;
  c.id = "compressible_smooth";
  c.amplitude = 0.05;
  const Path p = reference_path(case_initial_state(c, box(16), Eos::barotropic_power(1.0, 1.0, 1.4)), 0.5, 5, 4,
                                Viscosity(0.1), Gravitation::periodic_potentials(0.2, 0.1, 1.0));
  const double m0 = integrate(p.states[0].rho);
  for (const FluidState& s : p.states) EXPECT_NEAR(integrate(s.rho), m0, 1e-14 * m0);
}

TEST(Oracle, StepsAboveTheStabilityLimitAreRefused) {
  const FluidState s = case_initial_state({}, box(16), Eos::incompressible(1.0));
  const Viscosity visc(0.1);
  const double limit = stable_dt(s, visc);
  EXPECT_GT(limit, 0.0);
  EXPECT_THROW(step_incompressible(s, 2.0 * limit, visc, Gravitation::zero()), NumericalError);
  EXPECT_NO_THROW(step_incompressible(s, 0.5 * limit, visc, Gravitation::zero()));
}

TEST(Oracle, CaseErrors) {
  CaseSpec c;
  c.id = "nope";
  try {
    case_initial_state(c, box(8), Eos::incompressible(1.0));
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.path(), "case.id");
  }
  try {
    case_initial_state({}, box(8), Eos::barotropic_power(1.0, 1.0, 1.4));
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.path(), "eos.kind");
  }
}

TEST(Oracle, NoiseIsSeededSolenoidalAndScaled) {
  const Path ref = reference_path(case_initial_state({}, box(16), Eos::incompressible(1.0)), 0.5, 3, 4,
                                  Viscosity(0.1), Gravitation::zero());
  Path a = ref, b = ref, c = ref;
  add_solenoidal_noise(a, 0.1, 42);
  add_solenoidal_noise(b, 0.1, 42);
  add_solenoidal_noise(c, 0.1, 43);
  EXPECT_EQ(norm_max(a.states[0].v - ref.states[0].v), 0.0);
  for (std::size_t k = 1; k < a.states.size(); ++k) {
    const VectorField d = a.states[k].v - ref.states[k].v;
    EXPECT_EQ(norm_max(a.states[k].v - b.states[k].v), 0.0);
    EXPECT_GT(norm_max(a.states[k].v - c.states[k].v), 0.0);
    EXPECT_NEAR(norm_l2(d), 0.1 * norm_l2(ref.states[k].v), 1e-12);
    EXPECT_LT(norm_max(div_vector(d)), 1e-12);
  }
}
