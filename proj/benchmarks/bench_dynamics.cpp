#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "consensus_lab/hull.hpp"
#include "consensus_lab/scenarios.hpp"
#include "consensus_lab/simulator.hpp"
#include "consensus_lab/update_map.hpp"

namespace {

using namespace consensus_lab;

void BM_CounterexampleSimulate(benchmark::State& state) {
  const auto schedule = counterexample_schedule();
  const Time steps = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(simulate(schedule, LinearAverage(true), AgentState::scalar({0, 1, 1}), 1, steps));
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_CounterexampleSimulate)->Arg(1000)->Arg(10000);

void BM_KuramotoStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Arc> arcs;
  for (Node k = 1; k <= n; ++k)
    for (Node l = 1; l <= n; ++l)
      if (k != l) arcs.push_back({k, l});
  const DirectedGraph complete(n, arcs);
  std::vector<double> x(n);
  for (int k = 0; k < n; ++k) x[k] = 0.1 * k;
  const AgentState x0 = AgentState::scalar(x);
  for (auto _ : state) benchmark::DoNotOptimize(kuramoto_time1(complete, x0));
}
BENCHMARK(BM_KuramotoStep)->Arg(4)->Arg(16)->Arg(64);

void BM_PlanarHull(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<std::array<double, 2>> pts(state.range(0));
  for (auto& p : pts) p = {u(rng), u(rng)};
  const AgentState x = AgentState::planar(pts);
  for (auto _ : state) benchmark::DoNotOptimize(diameter(hull(x)));
}
BENCHMARK(BM_PlanarHull)->Arg(16)->Arg(256)->Arg(4096);

}  // namespace
