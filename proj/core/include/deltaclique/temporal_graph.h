#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "deltaclique/interval.h"

namespace deltaclique {

// Undirected interaction between u and v at time step t. Canonical form has
// u < v.
struct TimeEdge {
  VertexId u = 0;
  VertexId v = 0;
  Time t = 0;

  friend constexpr bool operator==(const TimeEdge&, const TimeEdge&) = default;
};

// Orders by (t, u, v).
constexpr bool edge_time_less(const TimeEdge& x, const TimeEdge& y) {
  if (x.t != y.t) return x.t < y.t;
  if (x.u != y.u) return x.u < y.u;
  return x.v < y.v;
}

// Vertex table plus time-stamped edges over a lifetime [alpha, omega].
// Immutable after construction.
class TemporalGraph {
 public:
  // Canonicalizes endpoint order, sorts by (t, u, v) and drops duplicate
  // time-edges. Throws InvalidArgument on self-loops, unknown vertex ids,
  // edge times outside the lifetime, an inverted lifetime, negative times
  // or duplicate labels.
  TemporalGraph(std::vector<std::string> labels, std::vector<TimeEdge> edges,
                Interval lifetime, std::string resolution_note = {});

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const TimeEdge> edges() const { return edges_; }
  Interval lifetime() const { return lifetime_; }
  const std::string& resolution_note() const { return resolution_note_; }

  // Number of duplicate time-edges dropped during construction.
  std::size_t duplicates_removed() const { return duplicates_removed_; }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<VertexId> find_vertex(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<TimeEdge> edges_;
  Interval lifetime_;
  std::string resolution_note_;
  std::size_t duplicates_removed_ = 0;
};

// Delta value scaled to the graph's edge appearance rate:
// floor(5^exponent * lifetime_length / (5 * edge_count)), and 0 for
// exponent 0. Throws InvalidArgument when the result would exceed the
// lifetime length or the inputs are degenerate.
Time scaled_delta(std::size_t edge_count, Time lifetime_length, int exponent);
Time scaled_delta(const TemporalGraph& graph, int exponent);

}  // namespace deltaclique
