#include "deltaclique/enumerator.h"

#include <algorithm>
#include <chrono>
#include <set>
#include <utility>

#include "deltaclique/errors.h"

namespace deltaclique {

CliqueEnumerator::CliqueEnumerator(const NeighborhoodIndex& index,
                                   PivotStrategy strategy, CliqueSink sink,
                                   CallTrace* trace)
    : index_(index), strategy_(strategy), sink_(std::move(sink)), trace_(trace) {}

void CliqueEnumerator::run() {
  const Interval lifetime = index_.lifetime();
  std::vector<VertexIntervalPair> all;
  all.reserve(index_.vertex_count());
  for (VertexId v = 0; v < index_.vertex_count(); ++v) all.push_back({v, lifetime});
  expand(PairSet::adopt(index_.delta(), std::move(all)), Clique{{}, lifetime},
         PairSet(index_.delta()));
}

void CliqueEnumerator::expand(PairSet candidates, const Clique& current,
                              PairSet excluded) {
  if (!current.vertices.empty()) {
    ++stats_.recursive_calls;
    if (trace_ != nullptr) trace_->push_back(current);

    // Every member of P ∪ X already lies inside I, so "strictly inside" is
    // the same as "not equal to I".
    auto spans_all = [&](const VertexIntervalPair& p) {
      return p.interval == current.interval;
    };
    if (std::none_of(candidates.begin(), candidates.end(), spans_all) &&
        std::none_of(excluded.begin(), excluded.end(), spans_all)) {
      ++stats_.clique_count;
      stats_.max_clique_size = std::max(stats_.max_clique_size, current.vertices.size());
      stats_.max_lifetime = std::max(stats_.max_lifetime, current.interval.length());
      sink_(current);
    }
  }
  if (candidates.empty()) return;

  const auto pivots = select_pivots(candidates, excluded, strategy_, index_);
  std::vector<VertexIntervalPair> branch =
      pivots.empty() ? std::vector<VertexIntervalPair>(candidates.begin(), candidates.end())
                     : reduce_candidates(candidates, pivots, index_);
  stats_.pivot_skips += candidates.size() - branch.size();

  for (const auto& pick : branch) {
    const PairSet hood = index_.neighborhood(pick.vertex, pick.interval);
    ++stats_.neighborhood_queries;

    Clique next;
    next.vertices.reserve(current.vertices.size() + 1);
    auto pos = std::lower_bound(current.vertices.begin(), current.vertices.end(),
                                pick.vertex);
    next.vertices.insert(next.vertices.end(), current.vertices.begin(), pos);
    next.vertices.push_back(pick.vertex);
    next.vertices.insert(next.vertices.end(), pos, current.vertices.end());
    next.interval = pick.interval;

    PairSet next_candidates = delta_cut(candidates, hood);
    PairSet next_excluded = delta_cut(excluded, hood);
    stats_.delta_cuts += 2;
    expand(std::move(next_candidates), next, std::move(next_excluded));

    candidates = remove_pair(candidates, pick);
    excluded = insert_pair(excluded, pick);
  }
}

RunStats enumerate_maximal_cliques(const TemporalGraph& graph, Time delta,
                                   PivotStrategy strategy,
                                   const CliqueSink& sink, CallTrace* trace) {
  if (delta < 0) throw InvalidArgument("delta must be >= 0");
  if (delta > graph.lifetime().length()) {
    throw InvalidArgument("delta " + std::to_string(delta) +
                          " exceeds the lifetime length " +
                          std::to_string(graph.lifetime().length()) +
                          ": no delta-clique can exist");
  }
  if (graph.vertex_count() == 0) throw InvalidArgument("graph has no vertices");

  const auto started = std::chrono::steady_clock::now();
  const NeighborhoodIndex index(graph, delta);
  CliqueEnumerator enumerator(index, strategy, sink, trace);
  enumerator.run();
  RunStats stats = enumerator.stats();
  stats.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return stats;
}

std::vector<Clique> collect_maximal_cliques(const TemporalGraph& graph,
                                            Time delta, PivotStrategy strategy,
                                            RunStats* stats, CallTrace* trace) {
  std::vector<Clique> out;
  RunStats s = enumerate_maximal_cliques(
      graph, delta, strategy, [&](const Clique& c) { out.push_back(c); }, trace);
  sort_canonical(out, graph);
  if (stats != nullptr) *stats = s;
  return out;
}

void sort_canonical(std::vector<Clique>& cliques, const TemporalGraph& graph) {
  // Rank vertices by label so that each clique's key is its sorted label
  // sequence, independent of how ids were assigned.
  const std::size_t n = graph.vertex_count();
  std::vector<VertexId> by_label(n);
  for (VertexId v = 0; v < n; ++v) by_label[v] = v;
  std::sort(by_label.begin(), by_label.end(),
            [&](VertexId a, VertexId b) { return graph.label(a) < graph.label(b); });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[by_label[r]] = r;

  using Key = std::pair<Interval, std::vector<std::size_t>>;
  std::vector<std::pair<Key, Clique>> keyed;
  keyed.reserve(cliques.size());
  for (auto& c : cliques) {
    std::vector<std::size_t> ranks;
    ranks.reserve(c.vertices.size());
    for (auto v : c.vertices) ranks.push_back(rank[v]);
    std::sort(ranks.begin(), ranks.end());
    keyed.emplace_back(Key{c.interval, std::move(ranks)}, std::move(c));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 0; i < keyed.size(); ++i) cliques[i] = std::move(keyed[i].second);
}

bool check_no_duplicate_calls(std::span<const Clique> trace) {
  std::set<std::pair<Interval, std::vector<VertexId>>> seen;
  for (const auto& call : trace) {
    auto vertices = call.vertices;
    std::sort(vertices.begin(), vertices.end());
    if (!seen.emplace(call.interval, std::move(vertices)).second) return false;
  }
  return true;
}

}  // namespace deltaclique
