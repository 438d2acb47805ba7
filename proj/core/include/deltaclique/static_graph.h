#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "deltaclique/interval.h"
#include "deltaclique/temporal_graph.h"

namespace deltaclique {

// Simple undirected graph with sorted, duplicate-free adjacency lists.
class StaticGraph {
 public:
  explicit StaticGraph(std::size_t vertex_count = 0) : adjacency_(vertex_count) {}

  // Self-loops and repeated edges are ignored.
  StaticGraph(std::size_t vertex_count,
              std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool has_edge(VertexId u, VertexId v) const;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Edge {u, v} iff some time-edge joins u and v.
StaticGraph underlying_static_graph(const TemporalGraph& graph);

// Static graph of the time-edges whose time lies in `window`.
StaticGraph window_graph(const TemporalGraph& graph, const Interval& window);

}  // namespace deltaclique
