#include <random>

#include <gtest/gtest.h>

#include "deltaclique/degeneracy.h"
#include "deltaclique/errors.h"
#include "deltaclique/oracle.h"
#include "fixtures.h"

namespace deltaclique {
namespace {

StaticGraph random_static_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::bernoulli_distribution coin(p);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return StaticGraph(n, edges);
}

// Each vertex has at most d neighbors later in the ordering.
bool ordering_respects_degeneracy(const StaticGraph& g, const DegeneracyResult& r) {
  if (r.ordering.size() != g.vertex_count()) return false;
  std::vector<std::size_t> position(g.vertex_count(), g.vertex_count());
  for (std::size_t i = 0; i < r.ordering.size(); ++i) {
    if (position[r.ordering[i]] != g.vertex_count()) return false;
    position[r.ordering[i]] = i;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::size_t later = 0;
    for (auto w : g.neighbors(v)) later += position[w] > position[v];
    if (later > r.degeneracy) return false;
  }
  return true;
}

TEST(DegeneracyOrderingTest, SmallGraphs) {
  const std::vector<std::pair<VertexId, VertexId>> triangle{{0, 1}, {1, 2}, {0, 2}};
  EXPECT_EQ(degeneracy_ordering(StaticGraph(3, triangle)).degeneracy, 2u);

  const std::vector<std::pair<VertexId, VertexId>> star{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}};
  const auto r = degeneracy_ordering(StaticGraph(6, star));
  EXPECT_EQ(r.degeneracy, 1u);
  // Leaves peel first in id order; the hub goes once it is down to degree 1.
  EXPECT_EQ(r.ordering, (std::vector<VertexId>{1, 2, 3, 4, 0, 5}));

  EXPECT_EQ(degeneracy_ordering(StaticGraph(0)).degeneracy, 0u);
  EXPECT_EQ(degeneracy_ordering(StaticGraph(4)).degeneracy, 0u);
}

TEST(DegeneracyOrderingTest, MatchesBruteForceDefinition) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testing::uniform(rng, 1, 10);
    const auto g = random_static_graph(rng, n, 0.1 + 0.1 * (trial % 8));
    const auto r = degeneracy_ordering(g);
    ASSERT_TRUE(ordering_respects_degeneracy(g, r));
    ASSERT_EQ(r.degeneracy, oracle::brute_force_degeneracy(g));
    ASSERT_EQ(r.degeneracy, oracle::naive_degeneracy(g));
  }
}

TEST(SliceDegeneracyTest, ExampleGraph) {
  const auto g = testing::example_graph();
  EXPECT_EQ(delta_slice_degeneracy(g, 2), 2u);
  EXPECT_EQ(oracle::naive_slice_degeneracy(g, 2), 2u);
  EXPECT_EQ(delta_slice_degeneracy(g, 0), 1u);
  EXPECT_EQ(delta_slice_degeneracy(g, 8),
            degeneracy_ordering(underlying_static_graph(g)).degeneracy);
  EXPECT_EQ(max_clique_size_bound(0), 1u);
  EXPECT_EQ(max_clique_size_bound(2), 3u);
}

TEST(SliceDegeneracyTest, Breakpoints) {
  const auto g = testing::example_graph();
  // {0} ∪ {s - 2} ∪ {s + 1} for s in {2..6}, clipped to [0, 6].
  EXPECT_EQ(slice_breakpoints(g, 2), (std::vector<Time>{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(slice_breakpoints(g, 8), (std::vector<Time>{0}));
  EXPECT_THROW(slice_breakpoints(g, 9), InvalidArgument);
  EXPECT_THROW(delta_slice_degeneracy(g, -1), InvalidArgument);
}

TEST(SliceDegeneracyTest, BreakpointSweepMatchesFullSweep) {
  std::uint64_t seed = 900;
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_temporal_graph(
        {static_cast<std::size_t>(4 + trial % 4), 10 + trial % 7, 0.05 + 0.05 * (trial % 5), seed++});
    const auto static_d = degeneracy_ordering(underlying_static_graph(g)).degeneracy;
    std::size_t previous = 0;
    for (Time delta = 0; delta <= g.lifetime().length(); ++delta) {
      const auto d = delta_slice_degeneracy(g, delta);
      ASSERT_EQ(d, oracle::naive_slice_degeneracy(g, delta)) << "seed " << seed - 1;
      EXPECT_GE(d, previous);
      EXPECT_LE(d, static_d);
      previous = d;
    }
    EXPECT_EQ(previous, static_d);
  }
}

}  // namespace
}  // namespace deltaclique
