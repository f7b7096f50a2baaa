#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sben/archive.hpp"

namespace sben::cli {

namespace fs = std::filesystem;

namespace {

void require_box_compatible(const RunConfig& cfg) {
  if (cfg.G.preset() == Gravitation::Preset::uniform_gravity) {
    throw ConfigError("gravitation.preset",
                      "uniform_gravity is not periodic; it is only used by the force-residual checks");
  }
}

double max_ns_residual(const SbenReport& r) {
  double m = 0.0;
  for (const IntervalTerms& t : r.intervals) m = std::max(m, t.ns_residual_max);
  return m;
}

void print_summary(std::ostream& log, const SbenReport& r, double tol_pi) {
  log << std::scientific << std::setprecision(4);
  log << "Pi              " << r.pi << "\n";
  log << "int phi dt      " << r.phi_integral << "\n";
  log << "Pi tolerance    " << tol_pi << (r.pi <= tol_pi ? "  (below)" : "  (above)") << "\n";
  log << "max NS residual " << max_ns_residual(r) << "\n";
  log << "max div v       " << r.max_divergence << "\n";
  log << std::defaultfloat;
}

void write_json(const fs::path& file, const std::string& text) {
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
  std::ofstream out(file);
  if (!out) throw Error("cannot write " + file.string());
  out << text << "\n";
}

}  // namespace

Path build_reference(const RunConfig& cfg) {
  require_box_compatible(cfg);
  const FluidState init = case_initial_state(cfg.case_spec, cfg.grid, cfg.eos);
  return reference_path(init, cfg.T, cfg.N, cfg.substeps, cfg.visc, cfg.G);
}

int cmd_check(const RunConfig& cfg, const std::optional<fs::path>& out, std::ostream& log) {
  const std::vector<CheckItem> items = run_check_suite(cfg);
  bool all = true;
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  log << std::left << std::setw(34) << "invariant" << std::setw(8) << "result" << std::setw(14) << "value"
      << "bound\n";
  for (const CheckItem& it : items) {
    all = all && it.pass;
    log << std::left << std::setw(34) << it.name << std::setw(8) << (it.pass ? "PASS" : "FAIL") << std::scientific
        << std::setprecision(3) << std::setw(14) << it.value << it.bound << std::defaultfloat << "\n";
    j.push_back({{"name", it.name}, {"value", it.value}, {"bound", it.bound}, {"pass", it.pass}});
  }
  if (out) write_json(*out / "check.json", j.dump(2));
  if (!all) {
    for (const CheckItem& it : items) {
      if (!it.pass) log << "failed: " << it.name << "\n";
    }
    return invariant_failure;
  }
  return ok;
}

int cmd_reference(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
  Path path = build_reference(cfg);
  const SbenProblem prob = cfg.problem();
  const SbenReport rep = assemble_pi(path, prob, AssembleOptions{.with_pressure = true});
  path.pressure = rep.pressure;
  write_path_archive(out, path);
  write_report(out / "report.json", rep);
  log << "reference path: " << path.intervals() << " intervals on " << cfg.grid.nx << "x" << cfg.grid.ny
      << " written to " << out.string() << "\n";
  print_summary(log, rep, cfg.minimizer.tol_pi_rel * rep.phi_integral);
  return ok;
}

int cmd_evaluate(const RunConfig& cfg, const fs::path& archive, const std::optional<fs::path>& out,
                 std::ostream& log) {
  require_box_compatible(cfg);
  const Path path = read_path_archive(archive, &cfg.grid);
  if (path.eos().kind() != cfg.eos.kind()) {
    throw ConfigError("eos.kind", "archive was written with a different equation of state");
  }
  const SbenReport rep = assemble_pi(path, cfg.problem(), AssembleOptions{.with_pressure = true});
  print_summary(log, rep, cfg.minimizer.tol_pi_rel * rep.phi_integral);
  if (out) write_report(*out / "report.json", rep);
  return ok;
}

int cmd_minimize(const RunConfig& cfg, const std::optional<fs::path>& warm_start, const fs::path& out,
                 std::ostream& log) {
  require_box_compatible(cfg);
  Path start;
  if (warm_start) {
    start = read_path_archive(*warm_start, &cfg.grid);
  } else {
    start = build_reference(cfg);
    if (cfg.noise > 0.0) add_solenoidal_noise(start, cfg.noise, cfg.seed);
  }
  const MinimizeResult res = minimize(start, cfg.problem(), cfg.minimizer);
  write_path_archive(out, res.path);
  write_report(out / "report.json", res.report);
  log << "status          " << res.report.status << " after " << res.report.iterations << " iterations\n";
  log << std::scientific << std::setprecision(4);
  log << "Pi start        " << res.report.pi_history.front() << "\n";
  if (res.report.pi > 0.0) log << "reduction       " << res.report.pi_history.front() / res.report.pi << "\n";
  log << std::defaultfloat;
  print_summary(log, res.report, cfg.minimizer.tol_pi_rel * res.report.phi_integral);
  return res.status == MinimizeStatus::line_search_failed ? numerical_failure : ok;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"SBEN space-time functional for Navier-Stokes on periodic grids"};
  app.require_subcommand(1);
  std::string config_file;
  std::string out_dir;
  std::string archive;
  std::string warm;
  std::optional<std::uint64_t> seed;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_file, "run configuration (JSON)")->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--seed", seed, "override the configured seed");
  };
  CLI::App* check = app.add_subcommand("check", "run the invariant suite");
  add_common(check);
  CLI::App* reference = app.add_subcommand("reference", "write an oracle path archive");
  add_common(reference);
  CLI::App* evaluate = app.add_subcommand("evaluate", "evaluate the functional on a path archive");
  add_common(evaluate);
  evaluate->add_option("--path", archive, "path archive directory")->required();
  CLI::App* mini = app.add_subcommand("minimize", "minimize the functional");
  add_common(mini);
  mini->add_option("--warm-start", warm, "start from this path archive");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : config_error;
  }

  try {
    RunConfig cfg = load_config(config_file);
    if (seed) cfg.seed = *seed;
    const fs::path out_path = out_dir.empty() ? fs::path("sben_out") : fs::path(out_dir);
    const std::optional<fs::path> maybe_out = out_dir.empty() ? std::nullopt : std::optional<fs::path>(out_dir);
    if (check->parsed()) return cmd_check(cfg, maybe_out, out);
    if (reference->parsed()) return cmd_reference(cfg, out_path, out);
    if (evaluate->parsed()) return cmd_evaluate(cfg, archive, maybe_out, out);
    return cmd_minimize(cfg, warm.empty() ? std::nullopt : std::optional<fs::path>(warm), out_path, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return config_error;
  } catch (const IncompatibleFields& e) {
    err << "input error: " << e.what() << "\n";
    return config_error;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return numerical_failure;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return config_error;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return numerical_failure;
  }
}

}  // namespace sben::cli
