#include "deltaclique/pivoting.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

namespace deltaclique {
namespace {

std::vector<VertexIntervalPair> merged(const PairSet& a, const PairSet& b) {
  std::vector<VertexIntervalPair> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint_from_all(const VertexIntervalPair& p,
                       std::span<const VertexIntervalPair> chosen) {
  return std::none_of(chosen.begin(), chosen.end(), [&](const auto& q) {
    return q.interval.overlaps(p.interval);
  });
}

std::vector<std::uint64_t> weights_of(std::span<const VertexIntervalPair> pool,
                                      const PairSet& candidates,
                                      const NeighborhoodIndex& index) {
  std::vector<std::uint64_t> w(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    w[i] = pivot_weight(pool[i], candidates, index);
  }
  return w;
}

}  // namespace

std::string_view to_string(PivotStrategy strategy) {
  switch (strategy) {
    case PivotStrategy::kNone: return "none";
    case PivotStrategy::kOneArbitrary: return "1a";
    case PivotStrategy::kOneGreedy: return "1g";
    case PivotStrategy::kMultiArbitrary: return "ma";
    case PivotStrategy::kMultiGreedy: return "mg";
    case PivotStrategy::kMultiMaximum: return "mm";
  }
  return "?";
}

std::optional<PivotStrategy> parse_pivot_strategy(std::string_view name) {
  std::string lower(name);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (auto s : kAllPivotStrategies) {
    if (lower == to_string(s)) return s;
  }
  return std::nullopt;
}

std::size_t pivot_weight(const VertexIntervalPair& pivot,
                         const PairSet& candidates,
                         const NeighborhoodIndex& index) {
  const PairSet hood = index.neighborhood(pivot.vertex, pivot.interval);
  if (hood.empty()) return 0;
  return static_cast<std::size_t>(
      std::count_if(candidates.begin(), candidates.end(),
                    [&](const auto& p) { return hood.temporally_contains(p); }));
}

std::vector<VertexIntervalPair> select_pivots(const PairSet& candidates,
                                              const PairSet& excluded,
                                              PivotStrategy strategy,
                                              const NeighborhoodIndex& index) {
  if (strategy == PivotStrategy::kNone) return {};
  const auto pool = merged(candidates, excluded);
  if (pool.empty()) return {};

  std::vector<VertexIntervalPair> chosen;
  switch (strategy) {
    case PivotStrategy::kNone:
      break;
    case PivotStrategy::kOneArbitrary:
      chosen.push_back(pool.front());
      break;
    case PivotStrategy::kOneGreedy: {
      const auto w = weights_of(pool, candidates, index);
      // max_element keeps the first maximum, i.e. canonical tie-breaking.
      chosen.push_back(pool[static_cast<std::size_t>(
          std::max_element(w.begin(), w.end()) - w.begin())]);
      break;
    }
    case PivotStrategy::kMultiArbitrary:
      for (const auto& p : pool) {
        if (disjoint_from_all(p, chosen)) chosen.push_back(p);
      }
      break;
    case PivotStrategy::kMultiGreedy: {
      // Pivots with disjoint intervals remove disjoint sets of candidates,
      // so a pivot's marginal gain is its plain weight.
      const auto w = weights_of(pool, candidates, index);
      std::vector<std::size_t> order(pool.size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
      for (auto i : order) {
        if (disjoint_from_all(pool[i], chosen)) chosen.push_back(pool[i]);
      }
      std::sort(chosen.begin(), chosen.end());
      break;
    }
    case PivotStrategy::kMultiMaximum: {
      const auto w = weights_of(pool, candidates, index);
      std::vector<Job> jobs(pool.size());
      for (std::size_t i = 0; i < pool.size(); ++i) jobs[i] = {pool[i].interval, w[i]};
      for (auto i : weighted_interval_scheduling(jobs).selected) {
        chosen.push_back(pool[i]);
      }
      break;
    }
  }
  return chosen;
}

std::vector<VertexIntervalPair> reduce_candidates(
    const PairSet& candidates, std::span<const VertexIntervalPair> pivots,
    const NeighborhoodIndex& index) {
  std::vector<PairSet> hoods;
  hoods.reserve(pivots.size());
  for (const auto& p : pivots) hoods.push_back(index.neighborhood(p.vertex, p.interval));

  std::vector<VertexIntervalPair> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) {
    bool covered = std::any_of(hoods.begin(), hoods.end(), [&](const PairSet& h) {
      return h.temporally_contains(c);
    });
    if (!covered) out.push_back(c);
  }
  return out;
}

Schedule weighted_interval_scheduling(std::span<const Job> jobs) {
  const std::size_t n = jobs.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = jobs[a].interval;
    const auto& y = jobs[b].interval;
    if (x.start != y.start) return x.start < y.start;
    if (x.end != y.end) return x.end < y.end;
    return a < b;
  });
  std::vector<Time> starts(n);
  for (std::size_t k = 0; k < n; ++k) starts[k] = jobs[order[k]].interval.start;

  // next[k]: first position after k whose job starts strictly after job k
  // ends. Jobs in between all overlap job k.
  std::vector<std::size_t> next(n);
  for (std::size_t k = 0; k < n; ++k) {
    next[k] = static_cast<std::size_t>(
        std::upper_bound(starts.begin(), starts.end(), jobs[order[k]].interval.end) -
        starts.begin());
  }

  // best[k]: optimum over the suffix order[k..n).
  std::vector<std::uint64_t> best(n + 1, 0);
  for (std::size_t k = n; k-- > 0;) {
    best[k] = std::max(best[k + 1], jobs[order[k]].weight + best[next[k]]);
  }

  Schedule schedule;
  schedule.total = best[0];
  for (std::size_t k = 0; k < n;) {
    if (jobs[order[k]].weight + best[next[k]] == best[k]) {
      schedule.selected.push_back(order[k]);
      k = next[k];
    } else {
      ++k;
    }
  }
  std::sort(schedule.selected.begin(), schedule.selected.end());
  return schedule;
}

}  // namespace deltaclique
