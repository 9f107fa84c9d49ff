#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "consensus_lab/graph.hpp"

namespace {

using namespace consensus_lab;

std::vector<DirectedGraph> random_graphs(int n, double p, int count) {
  std::mt19937_64 rng(n);
  std::bernoulli_distribution coin(p);
  std::vector<DirectedGraph> out;
  for (int i = 0; i < count; ++i) {
    std::vector<Arc> arcs;
    for (Node k = 1; k <= n; ++k)
      for (Node l = 1; l <= n; ++l)
        if (k != l && coin(rng)) arcs.push_back({k, l});
    out.emplace_back(n, arcs);
  }
  return out;
}

void BM_FindRoot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto graphs = random_graphs(n, 2.0 / n, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(find_root(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_FindRoot)->RangeMultiplier(4)->Range(4, 256);

void BM_Oracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto graphs = random_graphs(n, 2.0 / n, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(weakly_connected_oracle(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_Oracle)->DenseRange(4, 12, 4);

}  // namespace

BENCHMARK_MAIN();
