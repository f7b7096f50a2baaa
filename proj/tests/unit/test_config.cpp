#include <gtest/gtest.h>

#include "sben/config.hpp"

using namespace sben;

namespace {

std::string error_path(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "<no error>";
}

const char* kMinimal = R"({
  "grid": {"nx": 16, "ny": 8},
  "eos": {"kind": "incompressible", "rho0": 2.0},
  "viscosity": {"mu": 0.2},
  "time": {"T": 0.5, "N": 5},
  "case": {"id": "taylor_green"}
})";

}  // namespace

TEST(Config, DefaultTextParses) {
  const RunConfig c = parse_config(default_config_text());
  EXPECT_EQ(c.grid.nx, 32);
  EXPECT_EQ(c.grid.ny, 32);
  EXPECT_DOUBLE_EQ(c.visc.mu, 0.1);
  EXPECT_EQ(c.N, 25);
  EXPECT_EQ(c.seed, 42u);
}

TEST(Config, MinimalConfigUsesDefaults) {
  const RunConfig c = parse_config(kMinimal);
  EXPECT_NEAR(c.grid.lx, 2.0 * 3.141592653589793, 1e-15);
  EXPECT_EQ(c.substeps, 4);
  EXPECT_TRUE(c.G.is_zero());
  EXPECT_EQ(c.eos.rho0(), 2.0);
  EXPECT_EQ(c.noise, 0.0);
}

TEST(Config, ErrorsCarryFieldPaths) {
  EXPECT_EQ(error_path(R"({"eos": {"kind": "incompressible"}})"), "grid");
  EXPECT_EQ(error_path(R"({"grid": {"nx": 16, "ny": 16, "nz": 3}})"), "grid.nz");
  EXPECT_EQ(error_path(R"({"grid": {"nx": 2, "ny": 16}})"), "grid.nx");
  std::string bad_mu = kMinimal;
  bad_mu.replace(bad_mu.find("0.2"), 3, "-1.0");
  EXPECT_EQ(error_path(bad_mu), "viscosity.mu");
  std::string bad_nu = kMinimal;
  bad_nu.replace(bad_nu.find("\"taylor_green\""), 14, "\"taylor_green\", \"nu\": 0.2");
  EXPECT_EQ(error_path(bad_nu), "case.nu");
  std::string good_nu = kMinimal;
  good_nu.replace(good_nu.find("\"taylor_green\""), 14, "\"taylor_green\", \"nu\": 0.1");
  EXPECT_EQ(error_path(good_nu), "<no error>");
  std::string bad_kind = kMinimal;
  bad_kind.replace(bad_kind.find("incompressible"), 14, "plasma");
  EXPECT_EQ(error_path(bad_kind), "eos.kind");
  std::string bad_preset = kMinimal;
  bad_preset.replace(bad_preset.find("\"time\""), 6, R"("gravitation": {"preset": "rigid_rotation", "parameters": {"w": 1}}, "time")");
  EXPECT_EQ(error_path(bad_preset), "gravitation.parameters.w");
}

TEST(Config, MalformedJsonIsAConfigError) { EXPECT_THROW(parse_config("{ not json"), ConfigError); }

TEST(Config, MinimizerAndSeed) {
  std::string text = kMinimal;
  text.insert(text.rfind('}'), R"(, "minimizer": {"max_iter": 7, "tol_pi": 1e-6}, "seed": 9, "threads": 2)");
  const RunConfig c = parse_config(text);
  EXPECT_EQ(c.minimizer.max_iter, 7);
  EXPECT_DOUBLE_EQ(c.minimizer.tol_pi_rel, 1e-6);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.problem().threads, 2);
}
