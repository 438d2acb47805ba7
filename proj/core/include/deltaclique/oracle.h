#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "deltaclique/enumerator.h"
#include "deltaclique/interval.h"
#include "deltaclique/pair_set.h"
#include "deltaclique/static_graph.h"
#include "deltaclique/temporal_graph.h"

// Literal, quantifier-by-quantifier reference implementations used as
// ground truth by the test suites and the `verify` command. Nothing here
// reuses production algorithms beyond the shared data types.
namespace deltaclique::oracle {

struct Limits {
  std::size_t max_vertices = 8;
  Time max_lifetime = 16;
};

// (C, I) is a delta-clique: |I| >= delta and every pair of C meets in every
// window [tau, tau + delta], tau in [I.start, I.end - delta].
bool is_delta_clique(const TemporalGraph& graph, std::span<const VertexId> vertices,
                     const Interval& interval, Time delta);

// Every maximal delta-clique, by exhaustive search over vertex subsets and
// sub-intervals followed by dominance filtering. Sorted by
// (interval, vertex ids). Throws InvalidArgument beyond `limits`.
std::vector<Clique> brute_force_cliques(const TemporalGraph& graph, Time delta,
                                        const Limits& limits = {});

// Number of time-maximal delta-cliques with a non-empty vertex set.
std::size_t count_time_maximal_cliques(const TemporalGraph& graph, Time delta,
                                       const Limits& limits = {});

PairSet naive_delta_cut(const PairSet& x, const PairSet& y);

// All maximal sub-intervals of `within` during which w is a delta-neighbor
// of v, found by testing every candidate interval.
PairSet naive_delta_neighborhood(const TemporalGraph& graph, VertexId v,
                                 const Interval& within, Time delta);

// Degeneracy as max over non-empty vertex subsets of the minimum induced
// degree. Exponential; refuses graphs above 16 vertices.
std::size_t brute_force_degeneracy(const StaticGraph& graph);

// Degeneracy by repeatedly scanning for a minimum-degree vertex.
std::size_t naive_degeneracy(const StaticGraph& graph);

// Slice degeneracy by evaluating every window start in [alpha, omega - delta].
std::size_t naive_slice_degeneracy(const TemporalGraph& graph, Time delta);

// Maximal cliques of a static graph by plain Bron-Kerbosch without pivoting.
// Each clique is sorted; the list is sorted.
std::vector<std::vector<VertexId>> static_maximal_cliques(const StaticGraph& graph);

struct GeneratorParams {
  std::size_t vertex_count = 4;
  Time span = 8;  // lifetime [0, span]
  double edge_probability = 0.2;
  std::uint64_t seed = 0;
};

// Each (pair, time step) is an edge independently with the given
// probability. Deterministic for a fixed seed.
TemporalGraph random_temporal_graph(const GeneratorParams& params);

}  // namespace deltaclique::oracle
