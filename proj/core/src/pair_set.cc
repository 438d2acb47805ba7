#include "deltaclique/pair_set.h"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <utility>

#include "deltaclique/errors.h"

namespace deltaclique {
namespace {

bool key_less(const VertexIntervalPair& x, const VertexIntervalPair& y) {
  if (x.vertex != y.vertex) return x.vertex < y.vertex;
  return x.interval.start < y.interval.start;
}

// Intersection length of two intervals, or -1 when they are disjoint. A
// negative value is below every admissible delta.
Time overlap_length(const Interval& x, const Interval& y) {
  auto r = intersect(x, y);
  return r ? r->length() : Time{-1};
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const VertexIntervalPair& pair) {
  return os << "(" << pair.vertex << "," << pair.interval << ")";
}

bool satisfies_pair_set_invariants(Time delta,
                                   std::span<const VertexIntervalPair> pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    if (p.interval.start > p.interval.end) return false;
    if (p.interval.length() < delta) return false;
    if (i == 0) continue;
    const auto& prev = pairs[i - 1];
    if (!key_less(prev, p)) return false;
    if (prev.vertex != p.vertex) continue;
    // Sorted starts plus strictly increasing ends make the adjacent check
    // sufficient: a later interval can only overlap prev less than p does.
    if (p.interval.end <= prev.interval.end) return false;
    if (overlap_length(prev.interval, p.interval) >= delta) return false;
  }
  return true;
}

PairSet::PairSet(Time delta, std::vector<VertexIntervalPair> pairs)
    : delta_(delta), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  if (!satisfies_pair_set_invariants(delta_, pairs_)) {
    throw InvariantViolation("pair set violates ordering/overlap invariants");
  }
}

PairSet PairSet::adopt(Time delta, std::vector<VertexIntervalPair> pairs) {
  assert(satisfies_pair_set_invariants(delta, pairs));
  return PairSet(delta, std::move(pairs), true);
}

bool PairSet::temporally_contains(const VertexIntervalPair& p) const {
  // Last pair with (vertex, start) <= (p.vertex, p.start). Per vertex the
  // ends increase with the starts, so if any pair covers p, this one does.
  auto it = std::upper_bound(pairs_.begin(), pairs_.end(), p, key_less);
  if (it == pairs_.begin()) return false;
  --it;
  return it->vertex == p.vertex && it->interval.contains(p.interval);
}

bool PairSet::contains(const VertexIntervalPair& p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

std::ostream& operator<<(std::ostream& os, const PairSet& set) {
  os << "{";
  bool first = true;
  for (const auto& p : set) {
    if (!first) os << ", ";
    os << p;
    first = false;
  }
  return os << "}";
}

bool temporal_membership(const VertexIntervalPair& p, const PairSet& set) {
  return set.temporally_contains(p);
}

PairSet delta_cut(const PairSet& x, const PairSet& y) {
  if (x.delta() != y.delta()) {
    throw InvalidArgument("delta cut of pair sets with different delta");
  }
  const Time delta = x.delta();
  std::vector<VertexIntervalPair> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    const auto& px = x[i];
    const auto& py = y[j];
    if (px.vertex < py.vertex) {
      ++i;
      continue;
    }
    if (py.vertex < px.vertex) {
      ++j;
      continue;
    }
    if (auto r = intersect(px.interval, py.interval);
        r && r->length() >= delta) {
      out.push_back({px.vertex, *r});
    }
    // Advance whichever interval ends first; on a tie the y side moves.
    if (py.interval.end <= px.interval.end) {
      ++j;
    } else {
      ++i;
    }
  }
  return PairSet::adopt(delta, std::move(out));
}

PairSet remove_pair(const PairSet& set, const VertexIntervalPair& p) {
  auto pairs = set.pairs();
  auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
  if (it == pairs.end() || *it != p) return set;
  std::vector<VertexIntervalPair> out;
  out.reserve(pairs.size() - 1);
  out.insert(out.end(), pairs.begin(), it);
  out.insert(out.end(), it + 1, pairs.end());
  return PairSet::adopt(set.delta(), std::move(out));
}

PairSet insert_pair(const PairSet& set, const VertexIntervalPair& p) {
  auto pairs = set.pairs();
  auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
  if (it != pairs.end() && *it == p) return set;
  if (p.interval.start > p.interval.end ||
      p.interval.length() < set.delta()) {
    throw InvariantViolation("inserted pair is shorter than delta");
  }
  auto same_vertex = std::equal_range(
      pairs.begin(), pairs.end(), p,
      [](const VertexIntervalPair& a, const VertexIntervalPair& b) {
        return a.vertex < b.vertex;
      });
  for (auto q = same_vertex.first; q != same_vertex.second; ++q) {
    if (overlap_length(q->interval, p.interval) >= set.delta()) {
      throw InvariantViolation(
          "inserted pair overlaps a pair of the same vertex");
    }
  }
  std::vector<VertexIntervalPair> out;
  out.reserve(pairs.size() + 1);
  out.insert(out.end(), pairs.begin(), it);
  out.push_back(p);
  out.insert(out.end(), it, pairs.end());
  return PairSet::adopt(set.delta(), std::move(out));
}

}  // namespace deltaclique
