#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "deltaclique/interval.h"
#include "deltaclique/neighborhood.h"
#include "deltaclique/pair_set.h"

namespace deltaclique {

enum class PivotStrategy {
  kNone,
  kOneArbitrary,    // 1A: first candidate in canonical order
  kOneGreedy,       // 1G: single candidate of maximum weight
  kMultiArbitrary,  // MA: disjoint candidates taken in canonical order
  kMultiGreedy,     // MG: disjoint candidates taken by decreasing weight
  kMultiMaximum,    // MM: disjoint set of maximum total weight
};

inline constexpr PivotStrategy kAllPivotStrategies[] = {
    PivotStrategy::kNone,           PivotStrategy::kOneArbitrary,
    PivotStrategy::kOneGreedy,      PivotStrategy::kMultiArbitrary,
    PivotStrategy::kMultiGreedy,    PivotStrategy::kMultiMaximum,
};

// CLI spelling: none, 1a, 1g, ma, mg, mm. Parsing is case-insensitive.
std::string_view to_string(PivotStrategy strategy);
std::optional<PivotStrategy> parse_pivot_strategy(std::string_view name);

// Number of elements of `candidates` that lie temporally inside
// N^delta(pivot.vertex, pivot.interval). The pivot never counts itself.
std::size_t pivot_weight(const VertexIntervalPair& pivot,
                         const PairSet& candidates,
                         const NeighborhoodIndex& index);

// Pivots drawn from candidates ∪ excluded with pairwise disjoint intervals.
// Returns an empty list for kNone or when both sets are empty.
std::vector<VertexIntervalPair> select_pivots(const PairSet& candidates,
                                              const PairSet& excluded,
                                              PivotStrategy strategy,
                                              const NeighborhoodIndex& index);

// Candidates minus everything temporally inside some pivot's neighborhood,
// in canonical order.
std::vector<VertexIntervalPair> reduce_candidates(
    const PairSet& candidates, std::span<const VertexIntervalPair> pivots,
    const NeighborhoodIndex& index);

struct Job {
  Interval interval;
  std::uint64_t weight = 0;
};

struct Schedule {
  std::vector<std::size_t> selected;  // indices into the job list, ascending
  std::uint64_t total = 0;
};

// Maximum-weight subset of pairwise non-overlapping jobs (closed intervals
// sharing an endpoint overlap). O(n log n). Among optimal subsets the one
// whose jobs, listed by (start, end, index), is lexicographically first is
// returned.
Schedule weighted_interval_scheduling(std::span<const Job> jobs);

}  // namespace deltaclique
