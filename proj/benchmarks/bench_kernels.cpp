#include <benchmark/benchmark.h>

#include <numbers>

#include "sben/functional.hpp"
#include "sben/oracle.hpp"
#include "sben/random_fields.hpp"

using namespace sben;

namespace {

Grid2P box(int n) { return Grid2P(n, n, 2.0 * std::numbers::pi, 2.0 * std::numbers::pi); }

void BM_ApplyK(benchmark::State& st) {
  Rng rng(1);
  const VectorField v = random_smooth_vector(box(static_cast<int>(st.range(0))), rng);
  const Viscosity visc(0.1);
  for (auto _ : st) benchmark::DoNotOptimize(apply_K(v, visc));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(v.cells()));
}
BENCHMARK(BM_ApplyK)->Arg(32)->Arg(64)->Arg(128);

void BM_SolveK(benchmark::State& st) {
  Rng rng(2);
  VectorField f = random_smooth_vector(box(static_cast<int>(st.range(0))), rng);
  remove_null_modes(f);
  const Viscosity visc(0.1);
  for (auto _ : st) benchmark::DoNotOptimize(solve_K(f, visc, {}));
}
BENCHMARK(BM_SolveK)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_LerayProject(benchmark::State& st) {
  Rng rng(3);
  const VectorField v = random_smooth_vector(box(static_cast<int>(st.range(0))), rng);
  for (auto _ : st) benchmark::DoNotOptimize(leray_project(v));
}
BENCHMARK(BM_LerayProject)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_AssemblePi(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const SbenProblem prob{Viscosity(0.1), Gravitation::zero(), {}, static_cast<int>(st.range(1))};
  Path p = reference_path(case_initial_state({}, box(n), Eos::incompressible(1.0)), 1.0, 8, 4, prob.visc, prob.G);
  add_solenoidal_noise(p, 0.1, 42);
  for (auto _ : st) benchmark::DoNotOptimize(assemble_pi(p, prob));
}
BENCHMARK(BM_AssemblePi)->Args({32, 1})->Args({32, 4})->Args({64, 4})->Unit(benchmark::kMillisecond);

void BM_Gradient(benchmark::State& st) {
  const SbenProblem prob{Viscosity(0.1), Gravitation::zero(), {}, 1};
  Path p = reference_path(case_initial_state({}, box(32), Eos::incompressible(1.0)), 1.0, 8, 4, prob.visc, prob.G);
  add_solenoidal_noise(p, 0.1, 42);
  for (auto _ : st) benchmark::DoNotOptimize(gradient_pi(p, prob));
}
BENCHMARK(BM_Gradient)->Unit(benchmark::kMillisecond);

void BM_OracleStep(benchmark::State& st) {
  const FluidState s = case_initial_state({}, box(static_cast<int>(st.range(0))), Eos::incompressible(1.0));
  const Viscosity visc(0.1);
  const double dt = 0.5 * stable_dt(s, visc);
  for (auto _ : st) benchmark::DoNotOptimize(step_incompressible(s, dt, visc, Gravitation::zero()));
}
BENCHMARK(BM_OracleStep)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
