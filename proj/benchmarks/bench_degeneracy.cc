#include <benchmark/benchmark.h>

#include "deltaclique/degeneracy.h"
#include "deltaclique/oracle.h"

namespace dc = deltaclique;

namespace {

void BM_SliceDegeneracy(benchmark::State& state) {
  static const auto graph = dc::oracle::random_temporal_graph({60, 1000, 0.002, 3});
  const dc::Time delta = state.range(0);
  std::size_t d = 0;
  for (auto _ : state) {
    d = dc::delta_slice_degeneracy(graph, delta);
    benchmark::DoNotOptimize(d);
  }
  state.counters["degeneracy"] = static_cast<double>(d);
}

void BM_StaticDegeneracy(benchmark::State& state) {
  static const auto graph =
      dc::underlying_static_graph(dc::oracle::random_temporal_graph({400, 20, 0.002, 5}));
  for (auto _ : state) benchmark::DoNotOptimize(dc::degeneracy_ordering(graph).degeneracy);
}

}  // namespace

BENCHMARK(BM_SliceDegeneracy)->Arg(0)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StaticDegeneracy);
