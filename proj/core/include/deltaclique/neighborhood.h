#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "deltaclique/interval.h"
#include "deltaclique/pair_set.h"
#include "deltaclique/temporal_graph.h"

namespace deltaclique {

// Maximal delta-neighbor intervals over the whole lifetime for every vertex
// pair that shares at least one edge.
//
// For a pair with sorted edge times, times whose gap is at most delta + 1
// form one run (every window [tau, tau + delta] between them still contains
// an edge). A run t_first..t_last yields
//   [max(alpha, t_first - delta), min(omega, t_last + delta)].
// Two runs of the same pair overlap by at most delta - 2 steps.
class NeighborhoodIndex {
 public:
  NeighborhoodIndex(const TemporalGraph& graph, Time delta);

  Time delta() const { return delta_; }
  Interval lifetime() const { return lifetime_; }
  std::size_t vertex_count() const { return adjacency_.size(); }

  // N^delta(v, T), sorted by (neighbor, start).
  std::span<const VertexIntervalPair> neighbors(VertexId v) const {
    return adjacency_.at(v);
  }

  // Maximal intervals during which u and w are delta-neighbors.
  std::vector<Interval> intervals(VertexId u, VertexId w) const;

  // N^delta(v, within): every stored (w, J) clipped to `within`, kept when
  // the clipped length is still >= delta.
  PairSet neighborhood(VertexId v, const Interval& within) const;

 private:
  Time delta_;
  Interval lifetime_;
  std::vector<std::vector<VertexIntervalPair>> adjacency_;
};

NeighborhoodIndex build_neighborhood_index(const TemporalGraph& graph,
                                           Time delta);

PairSet delta_neighborhood(const NeighborhoodIndex& index, VertexId v,
                           const Interval& within);

}  // namespace deltaclique
