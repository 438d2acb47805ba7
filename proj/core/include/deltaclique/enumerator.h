#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "deltaclique/interval.h"
#include "deltaclique/neighborhood.h"
#include "deltaclique/pair_set.h"
#include "deltaclique/pivoting.h"
#include "deltaclique/temporal_graph.h"

namespace deltaclique {

// A delta-clique (C, I). Vertices are sorted ascending.
struct Clique {
  std::vector<VertexId> vertices;
  Interval interval;

  friend bool operator==(const Clique&, const Clique&) = default;
};

struct RunStats {
  std::uint64_t clique_count = 0;
  std::size_t max_clique_size = 0;
  Time max_lifetime = 0;
  // Calls with a non-empty clique; the root call (empty clique, lifetime)
  // is not counted.
  std::uint64_t recursive_calls = 0;
  // Candidates skipped because a pivot's neighborhood covered them.
  std::uint64_t pivot_skips = 0;
  // Operation counts for structural cost checks.
  std::uint64_t delta_cuts = 0;
  std::uint64_t neighborhood_queries = 0;
  double wall_time_seconds = 0.0;
};

// Receives each maximal delta-clique once, from the enumerating thread.
using CliqueSink = std::function<void(const Clique&)>;

// (C, I) of every non-root call, in call order.
using CallTrace = std::vector<Clique>;

// The delta Bron-Kerbosch recursion over a prebuilt neighborhood index.
//
// expand(P, R, X) expects R to be time-maximal and P ∪ X to be the delta cut
// of the neighborhoods of R's vertices over R's interval. It emits R when
// no element of P ∪ X spans all of R's interval, then recurses on every
// candidate left after pivot reduction, moving each one from P to X
// afterwards.
class CliqueEnumerator {
 public:
  CliqueEnumerator(const NeighborhoodIndex& index, PivotStrategy strategy,
                   CliqueSink sink, CallTrace* trace = nullptr);

  void expand(PairSet candidates, const Clique& current, PairSet excluded);

  // Root call: P = {(v, T)}, R = (∅, T), X = ∅.
  void run();

  const RunStats& stats() const { return stats_; }

 private:
  const NeighborhoodIndex& index_;
  PivotStrategy strategy_;
  CliqueSink sink_;
  CallTrace* trace_;
  RunStats stats_;
};

// Enumerates all maximal delta-cliques of `graph`. Throws InvalidArgument
// when delta < 0 or delta exceeds the lifetime length.
RunStats enumerate_maximal_cliques(const TemporalGraph& graph, Time delta,
                                   PivotStrategy strategy,
                                   const CliqueSink& sink,
                                   CallTrace* trace = nullptr);

// Materialized variant, sorted in canonical order.
std::vector<Clique> collect_maximal_cliques(const TemporalGraph& graph,
                                            Time delta, PivotStrategy strategy,
                                            RunStats* stats = nullptr,
                                            CallTrace* trace = nullptr);

// Canonical order: ascending (start, end, vertex-label sequence).
void sort_canonical(std::vector<Clique>& cliques, const TemporalGraph& graph);

// True iff no (C, I) appears twice in the trace.
bool check_no_duplicate_calls(std::span<const Clique> trace);

}  // namespace deltaclique
