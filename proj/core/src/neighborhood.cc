#include "deltaclique/neighborhood.h"

#include <algorithm>
#include <utility>

#include "deltaclique/errors.h"

namespace deltaclique {

NeighborhoodIndex::NeighborhoodIndex(const TemporalGraph& graph, Time delta)
    : delta_(delta),
      lifetime_(graph.lifetime()),
      adjacency_(graph.vertex_count()) {
  if (delta < 0) throw InvalidArgument("delta must be >= 0");

  // Group edge times by pair; edges are already time-sorted.
  std::vector<TimeEdge> by_pair(graph.edges().begin(), graph.edges().end());
  std::stable_sort(by_pair.begin(), by_pair.end(),
                   [](const TimeEdge& x, const TimeEdge& y) {
                     return x.u != y.u ? x.u < y.u : x.v < y.v;
                   });

  auto emit = [&](VertexId u, VertexId v, Time first, Time last) {
    Interval run{std::max(lifetime_.start, first - delta_),
                 std::min(lifetime_.end, last + delta_)};
    if (run.length() < delta_) return;
    adjacency_[u].push_back({v, run});
    adjacency_[v].push_back({u, run});
  };

  std::size_t i = 0;
  while (i < by_pair.size()) {
    const VertexId u = by_pair[i].u;
    const VertexId v = by_pair[i].v;
    Time first = by_pair[i].t;
    Time last = first;
    ++i;
    for (; i < by_pair.size() && by_pair[i].u == u && by_pair[i].v == v; ++i) {
      if (by_pair[i].t - last > delta_ + 1) {
        emit(u, v, first, last);
        first = by_pair[i].t;
      }
      last = by_pair[i].t;
    }
    emit(u, v, first, last);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::vector<Interval> NeighborhoodIndex::intervals(VertexId u, VertexId w) const {
  const auto& list = adjacency_.at(u);
  auto lo = std::lower_bound(list.begin(), list.end(), w,
                             [](const VertexIntervalPair& p, VertexId x) {
                               return p.vertex < x;
                             });
  std::vector<Interval> out;
  for (; lo != list.end() && lo->vertex == w; ++lo) out.push_back(lo->interval);
  return out;
}

PairSet NeighborhoodIndex::neighborhood(VertexId v, const Interval& within) const {
  std::vector<VertexIntervalPair> out;
  for (const auto& p : adjacency_.at(v)) {
    if (auto r = intersect(p.interval, within); r && r->length() >= delta_) {
      out.push_back({p.vertex, *r});
    }
  }
  // Clipping preserves the per-vertex order and can only shrink overlaps.
  return PairSet::adopt(delta_, std::move(out));
}

NeighborhoodIndex build_neighborhood_index(const TemporalGraph& graph,
                                           Time delta) {
  return NeighborhoodIndex(graph, delta);
}

PairSet delta_neighborhood(const NeighborhoodIndex& index, VertexId v,
                           const Interval& within) {
  return index.neighborhood(v, within);
}

}  // namespace deltaclique
