#include <random>

#include <benchmark/benchmark.h>

#include "deltaclique/oracle.h"
#include "deltaclique/pair_set.h"

namespace dc = deltaclique;

namespace {

dc::PairSet make_set(std::mt19937_64& rng, dc::Time delta, std::size_t vertices,
                     int per_vertex) {
  std::uniform_int_distribution<dc::Time> gap(1, 20), len(0, 30);
  std::vector<dc::VertexIntervalPair> pairs;
  for (dc::VertexId v = 0; v < vertices; ++v) {
    dc::Time start = gap(rng);
    for (int i = 0; i < per_vertex; ++i) {
      const dc::Time end = start + delta + len(rng);
      pairs.push_back({v, {start, end}});
      start = end + gap(rng);
    }
  }
  return dc::PairSet(delta, std::move(pairs));
}

void BM_DeltaCut(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto x = make_set(rng, 5, static_cast<std::size_t>(state.range(0)), 4);
  const auto y = make_set(rng, 5, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(dc::delta_cut(x, y));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size() + y.size()));
}

void BM_NaiveDeltaCut(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto x = make_set(rng, 5, static_cast<std::size_t>(state.range(0)), 4);
  const auto y = make_set(rng, 5, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(dc::oracle::naive_delta_cut(x, y));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size() + y.size()));
}

}  // namespace

BENCHMARK(BM_DeltaCut)->RangeMultiplier(4)->Range(16, 4096);
BENCHMARK(BM_NaiveDeltaCut)->RangeMultiplier(4)->Range(16, 1024);
