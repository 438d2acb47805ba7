#include "deltaclique/temporal_graph.h"

#include <algorithm>
#include <utility>

#include "deltaclique/errors.h"

namespace deltaclique {

TemporalGraph::TemporalGraph(std::vector<std::string> labels,
                             std::vector<TimeEdge> edges, Interval lifetime,
                             std::string resolution_note)
    : labels_(std::move(labels)),
      edges_(std::move(edges)),
      lifetime_(lifetime),
      resolution_note_(std::move(resolution_note)) {
  if (lifetime_.start < 0 || lifetime_.start > lifetime_.end) {
    throw InvalidArgument("invalid lifetime " + to_string(lifetime_));
  }
  ids_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!ids_.emplace(labels_[i], static_cast<VertexId>(i)).second) {
      throw InvalidArgument("duplicate vertex label '" + labels_[i] + "'");
    }
  }
  const auto n = labels_.size();
  for (auto& e : edges_) {
    if (e.u >= n || e.v >= n) {
      throw InvalidArgument("edge endpoint is not a vertex id");
    }
    if (e.u == e.v) throw InvalidArgument("self-loop on vertex " + labels_[e.u]);
    if (!lifetime_.contains(e.t)) {
      throw InvalidArgument("edge time " + std::to_string(e.t) +
                            " outside lifetime " + to_string(lifetime_));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), edge_time_less);
  auto last = std::unique(edges_.begin(), edges_.end());
  duplicates_removed_ = static_cast<std::size_t>(edges_.end() - last);
  edges_.erase(last, edges_.end());
}

std::optional<VertexId> TemporalGraph::find_vertex(std::string_view label) const {
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Time scaled_delta(std::size_t edge_count, Time lifetime_length, int exponent) {
  if (exponent < 0) throw InvalidArgument("delta exponent must be >= 0");
  if (edge_count == 0) throw InvalidArgument("delta scaling needs at least one edge");
  if (lifetime_length < 1) {
    throw InvalidArgument("delta scaling needs a lifetime of length >= 1");
  }
  if (exponent == 0) return 0;
  // floor(5^i * l / (5m)) == floor(5^(i-1) * l / m). Once 5^(i-1) > 2m the
  // quotient is already above l, so the power never needs more than ~66 bits.
  __extension__ typedef unsigned __int128 Wide;
  const Wide m = edge_count;
  const Wide length = static_cast<Wide>(lifetime_length);
  Wide power = 1;
  for (int k = 1; k < exponent; ++k) {
    power *= 5;
    if (power > 2 * m) {
      throw InvalidArgument("scaled delta for exponent " +
                            std::to_string(exponent) + " exceeds the lifetime");
    }
  }
  const Wide result = power * length / m;
  if (result > length) {
    throw InvalidArgument("scaled delta for exponent " +
                          std::to_string(exponent) + " exceeds the lifetime");
  }
  return static_cast<Time>(result);
}

Time scaled_delta(const TemporalGraph& graph, int exponent) {
  return scaled_delta(graph.edge_count(), graph.lifetime().length(), exponent);
}

}  // namespace deltaclique
