#pragma once

#include <random>
#include <string>
#include <vector>

#include "deltaclique/errors.h"
#include "deltaclique/pair_set.h"
#include "deltaclique/temporal_graph.h"

namespace deltaclique::testing {

// The three-vertex example graph: lifetime [0,8], edges
// ({a,b},2) ({a,b},3) ({a,c},4) ({b,c},5) ({a,c},6).
inline TemporalGraph example_graph() {
  return TemporalGraph({"a", "b", "c"},
                       {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {0, 2, 6}},
                       {0, 8});
}

// The pivoting illustration graph: the example graph plus ({b,c},1).
inline TemporalGraph pivot_example_graph() {
  return TemporalGraph(
      {"a", "b", "c"},
      {{1, 2, 1}, {0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {0, 2, 6}},
      {0, 8});
}

inline constexpr VertexId kA = 0;
inline constexpr VertexId kB = 1;
inline constexpr VertexId kC = 2;

inline TemporalGraph edgeless_graph(std::size_t n, Interval lifetime) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return TemporalGraph(std::move(labels), {}, lifetime);
}

inline Time uniform(std::mt19937_64& rng, Time lo, Time hi) {
  return std::uniform_int_distribution<Time>(lo, hi)(rng);
}

// Random valid pair set over `vertices` vertices. Consecutive intervals of a
// vertex overlap by anything from -3 (a gap) up to delta - 1.
inline PairSet random_pair_set(std::mt19937_64& rng, Time delta,
                               VertexId vertices, int per_vertex) {
  std::vector<VertexIntervalPair> pairs;
  for (VertexId v = 0; v < vertices; ++v) {
    Time start = uniform(rng, 0, 4);
    const int count = static_cast<int>(uniform(rng, 0, per_vertex));
    for (int i = 0; i < count; ++i) {
      const Time end = start + delta + uniform(rng, 0, 5);
      pairs.push_back({v, {start, end}});
      start = end - uniform(rng, -3, delta - 1);
    }
  }
  return PairSet(delta, std::move(pairs));
}

// A set whose intervals are placed so that their intersections with `x`
// have length exactly delta or delta - 1 where possible, mixed with random
// pairs. Candidates that would break the invariants are skipped.
inline PairSet boundary_partner(std::mt19937_64& rng, const PairSet& x,
                                VertexId vertices) {
  const Time delta = x.delta();
  PairSet y = random_pair_set(rng, delta, vertices, 2);
  for (const auto& p : x) {
    if (uniform(rng, 0, 2) == 0) continue;
    const Time shared = delta - uniform(rng, 0, 1);
    if (shared < 0) continue;
    const Time start = p.interval.end - shared;
    try {
      y = insert_pair(y, {p.vertex, {start, start + delta + uniform(rng, 0, 3)}});
    } catch (const InvariantViolation&) {
    }
  }
  return y;
}

}  // namespace deltaclique::testing
