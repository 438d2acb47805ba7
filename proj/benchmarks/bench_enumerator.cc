#include <benchmark/benchmark.h>

#include "deltaclique/enumerator.h"
#include "deltaclique/oracle.h"

namespace dc = deltaclique;

namespace {

// Random contact sequence: n vertices, lifetime [0, 400], sparse edges.
const dc::TemporalGraph& sample_graph() {
  static const auto graph = dc::oracle::random_temporal_graph({40, 400, 0.004, 17});
  return graph;
}

void BM_Enumerate(benchmark::State& state) {
  const auto strategy = dc::kAllPivotStrategies[state.range(0)];
  const dc::Time delta = state.range(1);
  const auto& graph = sample_graph();
  dc::RunStats stats;
  for (auto _ : state) {
    stats = dc::enumerate_maximal_cliques(graph, delta, strategy, [](const dc::Clique&) {});
    benchmark::DoNotOptimize(stats.clique_count);
  }
  state.SetLabel(std::string(to_string(strategy)));
  state.counters["cliques"] = static_cast<double>(stats.clique_count);
  state.counters["calls"] = static_cast<double>(stats.recursive_calls);
  state.counters["max_size"] = static_cast<double>(stats.max_clique_size);
}

void strategy_by_delta(benchmark::internal::Benchmark* b) {
  for (int s = 0; s < 6; ++s) {
    for (int delta : {0, 10, 50}) b->Args({s, delta});
  }
}

}  // namespace

BENCHMARK(BM_Enumerate)->Apply(strategy_by_delta)->Unit(benchmark::kMillisecond);
