#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "deltaclique/interval.h"

namespace deltaclique {

// A vertex together with a time interval. Ordered by (vertex, start, end).
struct VertexIntervalPair {
  VertexId vertex = 0;
  Interval interval;

  friend constexpr auto operator<=>(const VertexIntervalPair&,
                                    const VertexIntervalPair&) = default;
};

std::ostream& operator<<(std::ostream& os, const VertexIntervalPair& pair);

// Immutable set of vertex-interval pairs for a fixed delta.
//
// Invariants:
//   * pairs are sorted by (vertex, start) with no duplicates;
//   * every interval has length >= delta;
//   * two intervals of the same vertex intersect in length < delta.
//
// The last two imply that, per vertex, starts and ends are both strictly
// increasing, which is what makes the linear-time delta cut possible.
class PairSet {
 public:
  using const_iterator = std::vector<VertexIntervalPair>::const_iterator;

  explicit PairSet(Time delta) : delta_(delta) {}

  // Sorts `pairs` and validates the invariants. Throws InvariantViolation.
  PairSet(Time delta, std::vector<VertexIntervalPair> pairs);

  // Takes ownership of pairs that the caller already guarantees to be valid.
  // Validated only in debug builds.
  static PairSet adopt(Time delta, std::vector<VertexIntervalPair> pairs);

  Time delta() const { return delta_; }
  std::span<const VertexIntervalPair> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const_iterator begin() const { return pairs_.begin(); }
  const_iterator end() const { return pairs_.end(); }
  const VertexIntervalPair& operator[](std::size_t i) const {
    return pairs_[i];
  }

  // Temporal membership: some (p.vertex, J) in the set has p.interval ⊆ J.
  bool temporally_contains(const VertexIntervalPair& p) const;

  bool contains(const VertexIntervalPair& p) const;

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  PairSet(Time delta, std::vector<VertexIntervalPair> pairs, bool)
      : delta_(delta), pairs_(std::move(pairs)) {}

  Time delta_;
  std::vector<VertexIntervalPair> pairs_;
};

std::ostream& operator<<(std::ostream& os, const PairSet& set);

// Checks the PairSet invariants on an already sorted sequence.
bool satisfies_pair_set_invariants(Time delta,
                                   std::span<const VertexIntervalPair> pairs);

bool temporal_membership(const VertexIntervalPair& p, const PairSet& set);

// Delta cut: every (v, I ∩ J) with (v, I) in x, (v, J) in y and
// |I ∩ J| >= delta. Two-finger merge, O(|x| + |y|).
PairSet delta_cut(const PairSet& x, const PairSet& y);

// Returns `set` without `p`; unchanged when `p` is absent.
PairSet remove_pair(const PairSet& set, const VertexIntervalPair& p);

// Returns `set` with `p` added. Throws InvariantViolation when `p` would
// overlap a pair of the same vertex by delta or more, or is too short.
PairSet insert_pair(const PairSet& set, const VertexIntervalPair& p);

}  // namespace deltaclique
