#pragma once

#include <cstddef>
#include <vector>

#include "deltaclique/interval.h"
#include "deltaclique/static_graph.h"
#include "deltaclique/temporal_graph.h"

namespace deltaclique {

struct DegeneracyResult {
  std::size_t degeneracy = 0;
  // Removal order of min-degree peeling; every vertex has at most
  // `degeneracy` neighbors later in the order.
  std::vector<VertexId> ordering;
};

// Repeatedly removes a vertex of minimum remaining degree (smallest id on
// ties) using degree buckets.
DegeneracyResult degeneracy_ordering(const StaticGraph& graph);

// Maximum static degeneracy over the window graphs of [t, t + delta] for
// t in [alpha, omega - delta]. Only windows starting at alpha, at s - delta
// or at s + 1 for an edge time s are evaluated; the window's edge set is
// constant between those points. Throws InvalidArgument for delta outside
// [0, lifetime length].
std::size_t delta_slice_degeneracy(const TemporalGraph& graph, Time delta);

// Window start times evaluated by delta_slice_degeneracy, ascending.
std::vector<Time> slice_breakpoints(const TemporalGraph& graph, Time delta);

// Upper bound on the size of any clique in a d-degenerate graph.
constexpr std::size_t max_clique_size_bound(std::size_t degeneracy) {
  return degeneracy + 1;
}

}  // namespace deltaclique
