#include "deltaclique/static_graph.h"

#include <algorithm>

#include "deltaclique/errors.h"

namespace deltaclique {

StaticGraph::StaticGraph(std::size_t vertex_count,
                         std::span<const std::pair<VertexId, VertexId>> edges)
    : adjacency_(vertex_count) {
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InvalidArgument("static edge endpoint out of range");
    }
    if (u == v) continue;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

bool StaticGraph::has_edge(VertexId u, VertexId v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

StaticGraph underlying_static_graph(const TemporalGraph& graph) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(graph.edge_count());
  for (const auto& e : graph.edges()) pairs.emplace_back(e.u, e.v);
  return StaticGraph(graph.vertex_count(), pairs);
}

StaticGraph window_graph(const TemporalGraph& graph, const Interval& window) {
  auto edges = graph.edges();
  auto lo = std::lower_bound(edges.begin(), edges.end(), window.start,
                             [](const TimeEdge& e, Time t) { return e.t < t; });
  auto hi = std::upper_bound(lo, edges.end(), window.end,
                             [](Time t, const TimeEdge& e) { return t < e.t; });
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(static_cast<std::size_t>(hi - lo));
  for (auto it = lo; it != hi; ++it) pairs.emplace_back(it->u, it->v);
  return StaticGraph(graph.vertex_count(), pairs);
}

}  // namespace deltaclique
