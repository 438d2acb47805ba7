#include "deltaclique/oracle.h"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <string>

#include "deltaclique/errors.h"

namespace deltaclique::oracle {
namespace {

bool edge_in(const TemporalGraph& graph, VertexId v, VertexId w, Time from, Time to) {
  for (const auto& e : graph.edges()) {
    bool same_pair = (e.u == v && e.v == w) || (e.u == w && e.v == v);
    if (same_pair && from <= e.t && e.t <= to) return true;
  }
  return false;
}

// Dense edge-presence table over (pair, time step) for the brute-force
// search; built from the raw edge list.
class PresenceTable {
 public:
  explicit PresenceTable(const TemporalGraph& graph)
      : n_(graph.vertex_count()),
        alpha_(graph.lifetime().start),
        steps_(static_cast<std::size_t>(graph.lifetime().length()) + 1),
        present_(n_ * n_ * steps_, false) {
    for (const auto& e : graph.edges()) {
      const auto t = static_cast<std::size_t>(e.t - alpha_);
      present_[(e.u * n_ + e.v) * steps_ + t] = true;
      present_[(e.v * n_ + e.u) * steps_ + t] = true;
    }
  }

  bool any(VertexId v, VertexId w, Time from, Time to) const {
    for (Time t = from; t <= to; ++t) {
      if (present_[(v * n_ + w) * steps_ + static_cast<std::size_t>(t - alpha_)]) {
        return true;
      }
    }
    return false;
  }

  bool clique(std::uint32_t mask, Time a, Time b, Time delta) const {
    for (Time tau = a; tau <= b - delta; ++tau) {
      for (VertexId v = 0; v < n_; ++v) {
        if (!(mask >> v & 1u)) continue;
        for (VertexId w = v + 1; w < n_; ++w) {
          if ((mask >> w & 1u) && !any(v, w, tau, tau + delta)) return false;
        }
      }
    }
    return true;
  }

 private:
  std::size_t n_;
  Time alpha_;
  std::size_t steps_;
  std::vector<bool> present_;
};

struct Candidate {
  std::uint32_t mask;
  Interval interval;
};

std::vector<Candidate> all_delta_cliques(const TemporalGraph& graph, Time delta,
                                         const Limits& limits) {
  const std::size_t n = graph.vertex_count();
  const Interval life = graph.lifetime();
  if (n > limits.max_vertices || n > 31) {
    throw InvalidArgument("brute force refuses " + std::to_string(n) + " vertices");
  }
  if (life.length() > limits.max_lifetime) {
    throw InvalidArgument("brute force refuses lifetime length " +
                          std::to_string(life.length()));
  }
  const PresenceTable table(graph);
  std::vector<Candidate> found;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    for (Time a = life.start; a <= life.end; ++a) {
      for (Time b = a + delta; b <= life.end; ++b) {
        if (table.clique(mask, a, b, delta)) found.push_back({mask, {a, b}});
      }
    }
  }
  return found;
}

std::vector<VertexId> members(std::uint32_t mask) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < 32; ++v) {
    if (mask >> v & 1u) out.push_back(v);
  }
  return out;
}

}  // namespace

bool is_delta_clique(const TemporalGraph& graph, std::span<const VertexId> vertices,
                     const Interval& interval, Time delta) {
  if (interval.length() < delta) return false;
  for (Time tau = interval.start; tau <= interval.end - delta; ++tau) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = 0; j < vertices.size(); ++j) {
        if (vertices[i] == vertices[j]) continue;
        if (!edge_in(graph, vertices[i], vertices[j], tau, tau + delta)) return false;
      }
    }
  }
  return true;
}

std::vector<Clique> brute_force_cliques(const TemporalGraph& graph, Time delta,
                                        const Limits& limits) {
  const auto all = all_delta_cliques(graph, delta, limits);
  std::vector<Clique> out;
  for (const auto& c : all) {
    bool dominated = false;
    for (const auto& d : all) {
      const bool superset = (c.mask & d.mask) == c.mask;
      if (superset && d.interval.contains(c.interval) &&
          (d.mask != c.mask || d.interval != c.interval)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back({members(c.mask), c.interval});
  }
  std::sort(out.begin(), out.end(), [](const Clique& x, const Clique& y) {
    if (x.interval != y.interval) return x.interval < y.interval;
    return x.vertices < y.vertices;
  });
  return out;
}

std::size_t count_time_maximal_cliques(const TemporalGraph& graph, Time delta,
                                       const Limits& limits) {
  const auto all = all_delta_cliques(graph, delta, limits);
  std::size_t count = 0;
  for (const auto& c : all) {
    bool extendable = false;
    for (const auto& d : all) {
      if (d.mask == c.mask && d.interval.contains(c.interval) &&
          d.interval != c.interval) {
        extendable = true;
        break;
      }
    }
    if (!extendable) ++count;
  }
  return count;
}

PairSet naive_delta_cut(const PairSet& x, const PairSet& y) {
  std::set<VertexIntervalPair> out;
  for (const auto& p : x) {
    for (const auto& q : y) {
      if (p.vertex != q.vertex) continue;
      const Time lo = std::max(p.interval.start, q.interval.start);
      const Time hi = std::min(p.interval.end, q.interval.end);
      if (lo <= hi && hi - lo >= x.delta()) out.insert({p.vertex, {lo, hi}});
    }
  }
  return PairSet(x.delta(), std::vector<VertexIntervalPair>(out.begin(), out.end()));
}

PairSet naive_delta_neighborhood(const TemporalGraph& graph, VertexId v,
                                 const Interval& within, Time delta) {
  std::vector<VertexIntervalPair> out;
  for (VertexId w = 0; w < graph.vertex_count(); ++w) {
    if (w == v) continue;
    std::vector<Interval> valid;
    for (Time a = within.start; a <= within.end; ++a) {
      for (Time b = a + delta; b <= within.end; ++b) {
        bool ok = true;
        for (Time tau = a; ok && tau <= b - delta; ++tau) {
          ok = edge_in(graph, v, w, tau, tau + delta);
        }
        if (ok) valid.push_back({a, b});
      }
    }
    for (const auto& i : valid) {
      bool maximal = std::none_of(valid.begin(), valid.end(), [&](const Interval& j) {
        return j != i && j.contains(i);
      });
      if (maximal) out.push_back({w, i});
    }
  }
  return PairSet(delta, std::move(out));
}

std::size_t brute_force_degeneracy(const StaticGraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n > 16) throw InvalidArgument("brute-force degeneracy refuses > 16 vertices");
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::size_t min_degree = n;
    for (VertexId v = 0; v < n; ++v) {
      if (!(mask >> v & 1u)) continue;
      std::size_t d = 0;
      for (VertexId w : graph.neighbors(v)) d += mask >> w & 1u;
      min_degree = std::min(min_degree, d);
    }
    best = std::max(best, min_degree);
  }
  return best;
}

std::size_t naive_degeneracy(const StaticGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<bool> alive(n, true);
  std::size_t best = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    std::size_t pick_degree = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      std::size_t d = 0;
      for (VertexId w : graph.neighbors(v)) d += alive[w] ? 1 : 0;
      if (pick == n || d < pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    alive[pick] = false;
    best = std::max(best, pick_degree);
  }
  return best;
}

std::size_t naive_slice_degeneracy(const TemporalGraph& graph, Time delta) {
  const Interval life = graph.lifetime();
  std::size_t best = 0;
  for (Time t = life.start; t <= life.end - delta; ++t) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const auto& e : graph.edges()) {
      if (t <= e.t && e.t <= t + delta) pairs.emplace_back(e.u, e.v);
    }
    best = std::max(best, naive_degeneracy(StaticGraph(graph.vertex_count(), pairs)));
  }
  return best;
}

namespace {

void bron_kerbosch(const StaticGraph& graph, std::vector<VertexId>& r,
                   std::vector<VertexId> p, std::vector<VertexId> x,
                   std::vector<std::vector<VertexId>>& out) {
  if (p.empty() && x.empty()) {
    auto clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  while (!p.empty()) {
    const VertexId v = p.front();
    std::vector<VertexId> p2;
    std::vector<VertexId> x2;
    for (VertexId w : p) {
      if (graph.has_edge(v, w)) p2.push_back(w);
    }
    for (VertexId w : x) {
      if (graph.has_edge(v, w)) x2.push_back(w);
    }
    r.push_back(v);
    bron_kerbosch(graph, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(p.begin());
    x.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<VertexId>> static_maximal_cliques(const StaticGraph& graph) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> r;
  std::vector<VertexId> p(graph.vertex_count());
  for (VertexId v = 0; v < graph.vertex_count(); ++v) p[v] = v;
  if (!p.empty()) bron_kerbosch(graph, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

TemporalGraph random_temporal_graph(const GeneratorParams& params) {
  if (params.span < 0) throw InvalidArgument("span must be >= 0");
  const std::size_t n = params.vertex_count;
  const std::size_t width = std::to_string(n > 0 ? n - 1 : 0).size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    auto s = std::to_string(i);
    labels.push_back("v" + std::string(width - s.size(), '0') + s);
  }
  std::mt19937_64 rng(params.seed);
  auto coin = [&] {
    // 53 random bits mapped to [0, 1); independent of the library's
    // distribution implementations.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < params.edge_probability;
  };
  std::vector<TimeEdge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      for (Time t = 0; t <= params.span; ++t) {
        if (coin()) edges.push_back({u, v, t});
      }
    }
  }
  return TemporalGraph(std::move(labels), std::move(edges), {0, params.span});
}

}  // namespace deltaclique::oracle
