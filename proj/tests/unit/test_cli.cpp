#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace sben;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "sben_cli_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_config(const fs::path& dir, const std::string& text) {
  const fs::path f = dir / "config.json";
  std::ofstream(f) << text;
  return f;
}

std::string small_config(int n, double noise = 0.1) {
  return R"({"grid": {"nx": )" + std::to_string(n) + R"(, "ny": )" + std::to_string(n) +
         R"(}, "eos": {"kind": "incompressible", "rho0": 1.0}, "viscosity": {"mu": 0.1},
            "time": {"T": 1.0, "N": 8}, "case": {"id": "taylor_green", "noise": )" +
         std::to_string(noise) + "}}";
}

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "sben");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CheckPassesOnDefaultConfig) {
  const fs::path dir = scratch("check");
  const fs::path cfg = write_config(dir, default_config_text());
  const Outcome r = run({"check", "--config", cfg.string(), "--out", dir.string()});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  const auto table = nlohmann::json::parse(slurp(dir / "check.json"));
  EXPECT_GE(table.size(), 10u);
}

TEST(Cli, ConfigErrorsExitWithTwoAndNameTheField) {
  const fs::path dir = scratch("errors");
  std::string text = default_config_text();
  text.replace(text.find("\"mu\": 0.1"), 9, "\"mu\": 0.0");
  Outcome r = run({"check", "--config", write_config(dir, text).string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("viscosity.mu"), std::string::npos);
  r = run({"check", "--config", write_config(dir, R"({"eos": {"kind": "incompressible"}})").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("grid"), std::string::npos);
  r = run({"check", "--config", (dir / "missing.json").string()});
  EXPECT_EQ(r.code, 2);
  r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, UniformGravityIsRejectedForRuns) {
  const fs::path dir = scratch("ug");
  std::string text = small_config(8);
  text.insert(text.rfind('}'), R"(, "gravitation": {"preset": "uniform_gravity", "parameters": {"g0": 1.0}})");
  const Outcome r = run({"reference", "--config", write_config(dir, text).string(), "--out", (dir / "ref").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("gravitation.preset"), std::string::npos);
}

TEST(Cli, ReferenceEvaluateAndMismatch) {
  const fs::path dir = scratch("ref");
  const fs::path cfg = write_config(dir, small_config(16));
  ASSERT_EQ(run({"reference", "--config", cfg.string(), "--out", (dir / "ref").string()}).code, 0);
  const std::string before = slurp(dir / "ref" / "v_0003.csv");
  const Outcome e = run({"evaluate", "--config", cfg.string(), "--path", (dir / "ref").string(), "--out",
                     (dir / "eval").string()});
  EXPECT_EQ(e.code, 0) << e.err;
  EXPECT_NE(e.out.find("(below)"), std::string::npos) << e.out;
  EXPECT_EQ(slurp(dir / "ref" / "v_0003.csv"), before);
  const auto rep = nlohmann::json::parse(slurp(dir / "eval" / "report.json"));
  EXPECT_GT(rep.at("pi").get<double>(), 0.0);

  const fs::path other = write_config(scratch("ref_other"), small_config(8));
  const Outcome m = run({"evaluate", "--config", other.string(), "--path", (dir / "ref").string()});
  EXPECT_EQ(m.code, 2);
}

TEST(Cli, MinimizeIsDeterministicAndReducesPi) {
  const fs::path dir = scratch("min");
  const fs::path cfg = write_config(dir, small_config(8));
  ASSERT_EQ(run({"minimize", "--config", cfg.string(), "--out", (dir / "a").string(), "--seed", "5"}).code, 0);
  ASSERT_EQ(run({"minimize", "--config", cfg.string(), "--out", (dir / "b").string(), "--seed", "5"}).code, 0);
  for (const char* f : {"v_0001.csv", "v_0008.csv", "p_0004.csv", "manifest.json"}) {
    EXPECT_EQ(slurp(dir / "a" / f), slurp(dir / "b" / f)) << f;
  }
  const auto rep = nlohmann::json::parse(slurp(dir / "a" / "report.json"));
  EXPECT_GE(rep.at("pi_reduction").get<double>(), 10.0);

  // Warm start from the minimized archive keeps Pi where it was.
  const Outcome w = run({"minimize", "--config", cfg.string(), "--warm-start", (dir / "a").string(), "--out",
                     (dir / "c").string()});
  EXPECT_EQ(w.code, 0) << w.err;
  const auto rep_c = nlohmann::json::parse(slurp(dir / "c" / "report.json"));
  EXPECT_LE(rep_c.at("pi").get<double>(), rep.at("pi").get<double>() * (1.0 + 1e-12));
}

TEST(Cli, CheckSuiteItemsAllPass) {
  RunConfig cfg = parse_config(default_config_text());
  cfg.grid = Grid2P(16, 16, cfg.grid.lx, cfg.grid.ly);
  for (const cli::CheckItem& item : cli::run_check_suite(cfg)) EXPECT_TRUE(item.pass) << item.name << " " << item.value;
}
