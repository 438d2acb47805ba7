#include "deltaclique/degeneracy.h"

#include <algorithm>
#include <set>

#include "deltaclique/errors.h"

namespace deltaclique {

DegeneracyResult degeneracy_ordering(const StaticGraph& graph) {
  const std::size_t n = graph.vertex_count();
  DegeneracyResult result;
  result.ordering.reserve(n);
  if (n == 0) return result;

  std::vector<std::size_t> degree(n);
  std::size_t max_degree = 0;
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = graph.degree(v);
    max_degree = std::max(max_degree, degree[v]);
  }
  // Ordered buckets give the smallest id among the minimum-degree vertices.
  std::vector<std::set<VertexId>> buckets(max_degree + 1);
  for (VertexId v = 0; v < n; ++v) buckets[degree[v]].insert(v);
  std::vector<bool> removed(n, false);

  std::size_t low = 0;
  for (std::size_t step = 0; step < n; ++step) {
    while (buckets[low].empty()) ++low;
    const VertexId v = *buckets[low].begin();
    buckets[low].erase(buckets[low].begin());
    removed[v] = true;
    result.ordering.push_back(v);
    result.degeneracy = std::max(result.degeneracy, degree[v]);
    for (VertexId w : graph.neighbors(v)) {
      if (removed[w]) continue;
      buckets[degree[w]].erase(w);
      --degree[w];
      buckets[degree[w]].insert(w);
    }
    low = low > 0 ? low - 1 : 0;
  }
  return result;
}

std::vector<Time> slice_breakpoints(const TemporalGraph& graph, Time delta) {
  const Interval life = graph.lifetime();
  if (delta < 0 || delta > life.length()) {
    throw InvalidArgument("delta must lie in [0, lifetime length]");
  }
  const Time last_start = life.end - delta;
  std::vector<Time> points{life.start};
  for (const auto& e : graph.edges()) {
    for (Time t : {e.t - delta, e.t + 1}) {
      if (t >= life.start && t <= last_start) points.push_back(t);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::size_t delta_slice_degeneracy(const TemporalGraph& graph, Time delta) {
  std::size_t best = 0;
  for (Time t : slice_breakpoints(graph, delta)) {
    const StaticGraph window = window_graph(graph, {t, t + delta});
    if (window.edge_count() == 0) continue;
    best = std::max(best, degeneracy_ordering(window).degeneracy);
  }
  return best;
}

}  // namespace deltaclique
