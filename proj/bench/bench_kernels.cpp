// Serial reference vs OpenMP kernel. Last argument: 0 = serial reference,
// 1 = parallel kernel on one worker, 2 = parallel kernel on OBM_THREADS
// workers. The DP reference is a plain Bellman loop over every ad, so 0 vs 1
// is algorithm and 1 vs 2 is threads.

#include <benchmark/benchmark.h>

#include <random>

#include "obm/dynamic_relax.hpp"
#include "obm/exact_dp.hpp"
#include "obm/instance.hpp"
#include "obm/parallel.hpp"
#include "obm/policy_sim.hpp"

namespace obm {
namespace {

// Applies the mode's worker count; returns whether to run the parallel kernel.
bool enter_mode(benchmark::State& state, int default_workers) {
  const int mode = static_cast<int>(state.range(1));
  set_worker_count(mode == 1 ? 1 : default_workers);
  state.SetLabel(mode == 0 ? "serial reference" : "parallel x" + std::to_string(worker_count()));
  return mode != 0;
}

int g_default_workers = 1;

void BM_ExactDp(benchmark::State& state) {
  const Instance inst = gen_erdos(static_cast<int>(state.range(0)), 0.3, {3, 1});
  const bool parallel = enter_mode(state, g_default_workers);
  for (auto _ : state) {
    const DpResult r = parallel ? solve_dp(inst) : solve_dp_serial(inst);
    benchmark::DoNotOptimize(r.optimal_value);
  }
}
BENCHMARK(BM_ExactDp)->ArgsProduct({{12, 14}, {0, 1, 2}})->Unit(benchmark::kMillisecond);

void BM_SimulateGreedy(benchmark::State& state) {
  const Instance inst = gen_erdos(100, 0.05, {3, 2});
  const PolicyContext ctx = PolicyContext::greedy();
  const bool parallel = enter_mode(state, g_default_workers);
  for (auto _ : state) {
    const SimReport r = parallel ? simulate(inst, ctx, state.range(0), {1, 0})
                                 : simulate_serial(inst, ctx, state.range(0), {1, 0});
    benchmark::DoNotOptimize(r.mean);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateGreedy)->ArgsProduct({{2000}, {0, 1, 2}})->Unit(benchmark::kMillisecond);

void BM_OfflineMatching(benchmark::State& state) {
  const Instance inst = gen_erdos(100, 0.05, {3, 2});
  const bool parallel = enter_mode(state, g_default_workers);
  for (auto _ : state) {
    const SimReport r = parallel ? offline_matching(inst, state.range(0), {1, 0})
                                 : offline_matching_serial(inst, state.range(0), {1, 0});
    benchmark::DoNotOptimize(r.mean);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OfflineMatching)->ArgsProduct({{500}, {0, 1, 2}})->Unit(benchmark::kMillisecond);

void BM_SeparateJ2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ZVector z(n);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0 / n);
  for (double& v : z.raw()) v = u(rng);
  const bool parallel = enter_mode(state, g_default_workers);
  for (auto _ : state) {
    const std::vector<Cut> cuts = parallel ? separate_j2(z) : separate_j2_serial(z);
    benchmark::DoNotOptimize(cuts.size());
  }
}
BENCHMARK(BM_SeparateJ2)->ArgsProduct({{60, 100}, {0, 1, 2}})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace obm

int main(int argc, char** argv) {
  obm::g_default_workers = obm::worker_count();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
