#include <gtest/gtest.h>

#include "deltaclique/errors.h"
#include "deltaclique/oracle.h"
#include "fixtures.h"

namespace deltaclique {
namespace {

using testing::example_graph;
using testing::kA;
using testing::kB;
using testing::kC;

TEST(IsDeltaCliqueTest, Examples) {
  const auto g = example_graph();
  const std::vector<VertexId> abc{kA, kB, kC};
  EXPECT_TRUE(oracle::is_delta_clique(g, abc, {3, 5}, 2));
  EXPECT_FALSE(oracle::is_delta_clique(g, abc, {2, 5}, 2));
  EXPECT_FALSE(oracle::is_delta_clique(g, abc, {3, 6}, 2));
  EXPECT_FALSE(oracle::is_delta_clique(g, abc, {3, 4}, 2));  // shorter than delta
  const std::vector<VertexId> a{kA};
  EXPECT_TRUE(oracle::is_delta_clique(g, a, {0, 8}, 2));
}

TEST(BruteForceTest, ExampleGraph) {
  const auto got = oracle::brute_force_cliques(example_graph(), 2);
  const std::vector<Clique> expected = {
      {{kA, kB}, {0, 5}},     {{kA}, {0, 8}},     {{kB}, {0, 8}}, {{kC}, {0, 8}},
      {{kA, kC}, {2, 8}},     {{kA, kB, kC}, {3, 5}}, {{kB, kC}, {3, 7}},
  };
  EXPECT_EQ(got, expected);
  EXPECT_EQ(oracle::brute_force_cliques(example_graph(), 8),
            (std::vector<Clique>{{{kA, kB, kC}, {0, 8}}}));
}

TEST(BruteForceTest, EdgelessAndLimits) {
  const auto g = testing::edgeless_graph(2, {0, 4});
  EXPECT_EQ(oracle::brute_force_cliques(g, 0),
            (std::vector<Clique>{{{0}, {0, 4}}, {{1}, {0, 4}}}));
  EXPECT_THROW(oracle::brute_force_cliques(testing::edgeless_graph(9, {0, 4}), 0),
               InvalidArgument);
  EXPECT_THROW(oracle::brute_force_cliques(testing::edgeless_graph(2, {0, 17}), 0),
               InvalidArgument);
}

TEST(BruteForceTest, SurvivorsAreCliquesAndNotDominated) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = oracle::random_temporal_graph({4, 7, 0.3, seed});
    for (Time delta = 0; delta <= 3; ++delta) {
      const auto cliques = oracle::brute_force_cliques(g, delta);
      for (const auto& c : cliques) {
        ASSERT_TRUE(oracle::is_delta_clique(g, c.vertices, c.interval, delta));
        for (const auto& d : cliques) {
          if (&c == &d) continue;
          const bool subset = std::includes(d.vertices.begin(), d.vertices.end(),
                                            c.vertices.begin(), c.vertices.end());
          ASSERT_FALSE(subset && d.interval.contains(c.interval));
        }
      }
    }
  }
}

TEST(GeneratorTest, ProbabilityExtremesAndDeterminism) {
  const auto empty = oracle::random_temporal_graph({3, 8, 0.0, 1});
  EXPECT_EQ(empty.edge_count(), 0u);
  EXPECT_EQ(empty.vertex_count(), 3u);
  EXPECT_EQ(empty.lifetime(), (Interval{0, 8}));

  const auto full = oracle::random_temporal_graph({3, 8, 1.0, 1});
  EXPECT_EQ(full.edge_count(), 3u * 9u);

  const auto x = oracle::random_temporal_graph({5, 10, 0.3, 42});
  const auto y = oracle::random_temporal_graph({5, 10, 0.3, 42});
  EXPECT_TRUE(std::equal(x.edges().begin(), x.edges().end(), y.edges().begin(),
                         y.edges().end()));
  const auto z = oracle::random_temporal_graph({5, 10, 0.3, 43});
  EXPECT_FALSE(std::equal(x.edges().begin(), x.edges().end(), z.edges().begin(),
                          z.edges().end()));
}

TEST(StaticCliquesTest, Triangle) {
  const std::vector<std::pair<VertexId, VertexId>> triangle{{0, 1}, {1, 2}, {0, 2}};
  EXPECT_EQ(oracle::static_maximal_cliques(StaticGraph(3, triangle)),
            (std::vector<std::vector<VertexId>>{{0, 1, 2}}));
  const std::vector<std::pair<VertexId, VertexId>> path{{0, 1}, {1, 2}};
  EXPECT_EQ(oracle::static_maximal_cliques(StaticGraph(4, path)),
            (std::vector<std::vector<VertexId>>{{0, 1}, {1, 2}, {3}}));
}

TEST(CountTimeMaximalTest, ExampleGraph) {
  // Every vertex-maximal clique is time-maximal, so the count is at least 7.
  EXPECT_GE(oracle::count_time_maximal_cliques(example_graph(), 2), 7u);
}

}  // namespace
}  // namespace deltaclique
