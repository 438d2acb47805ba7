#include <random>

#include <gtest/gtest.h>

#include "deltaclique/errors.h"
#include "deltaclique/neighborhood.h"
#include "deltaclique/oracle.h"
#include "deltaclique/pair_set.h"
#include "fixtures.h"

namespace deltaclique {
namespace {

using testing::kA;
using testing::kB;
using testing::kC;

TEST(IntervalTest, BasicRelations) {
  const Interval i{2, 5};
  EXPECT_EQ(i.length(), 3);
  EXPECT_TRUE(i.contains(Time{2}));
  EXPECT_FALSE(i.contains(Time{6}));
  EXPECT_TRUE(i.contains(Interval{3, 5}));
  EXPECT_FALSE(i.contains(Interval{1, 5}));
  EXPECT_TRUE(i.overlaps({5, 9}));
  EXPECT_FALSE(i.overlaps({6, 9}));
  EXPECT_EQ(intersect(i, {4, 9}), (Interval{4, 5}));
  EXPECT_EQ(intersect(i, {5, 9}), (Interval{5, 5}));
  EXPECT_FALSE(intersect(i, {6, 9}).has_value());
  EXPECT_EQ(to_string(i), "[2,5]");
}

TEST(PairSetTest, ConstructorSortsAndValidates) {
  const PairSet s(2, {{kC, {2, 8}}, {kB, {0, 5}}});
  EXPECT_EQ(s[0], (VertexIntervalPair{kB, {0, 5}}));
  EXPECT_EQ(s[1], (VertexIntervalPair{kC, {2, 8}}));
  EXPECT_THROW(PairSet(2, {{kB, {0, 1}}}), InvariantViolation);
  EXPECT_THROW(PairSet(2, {{kB, {0, 5}}, {kB, {3, 7}}}), InvariantViolation);
  // Overlap of exactly delta - 1 is allowed.
  EXPECT_NO_THROW(PairSet(2, {{kB, {0, 5}}, {kB, {4, 7}}}));
}

TEST(TemporalMembershipTest, Examples) {
  const PairSet s(2, {{kB, {0, 5}}, {kC, {2, 8}}});
  EXPECT_TRUE(temporal_membership({kB, {1, 4}}, s));
  EXPECT_FALSE(temporal_membership({kB, {4, 6}}, s));
  EXPECT_FALSE(temporal_membership({kA, {1, 4}}, s));
  EXPECT_FALSE(temporal_membership({kB, {1, 4}}, PairSet(2)));

  const auto g = testing::example_graph();
  const auto n_a = delta_neighborhood(NeighborhoodIndex(g, 2), kA, {0, 8});
  EXPECT_TRUE(temporal_membership({kC, {5, 8}}, n_a));
  EXPECT_TRUE(temporal_membership({kB, {0, 4}}, n_a));
}

TEST(TemporalMembershipTest, FindsLaterIntervalOfSameVertex) {
  const PairSet s(2, {{kB, {0, 3}}, {kB, {2, 9}}, {kC, {0, 9}}});
  EXPECT_TRUE(temporal_membership({kB, {4, 6}}, s));
  EXPECT_TRUE(temporal_membership({kB, {0, 2}}, s));
  EXPECT_FALSE(temporal_membership({kB, {1, 4}}, s));
}

TEST(DeltaCutTest, Examples) {
  const PairSet x(2, {{kB, {0, 5}}, {kC, {2, 8}}});
  const PairSet y(2, {{kA, {2, 8}}, {kB, {3, 7}}});
  const PairSet expected(2, {{kB, {3, 5}}});
  EXPECT_EQ(delta_cut(x, y), expected);
  EXPECT_EQ(oracle::naive_delta_cut(x, y), expected);

  EXPECT_TRUE(delta_cut(x, PairSet(2)).empty());
  EXPECT_TRUE(delta_cut(PairSet(2), x).empty());

  const PairSet split(2, {{kC, {1, 3}}, {kC, {5, 8}}});
  const PairSet whole(2, {{kC, {0, 8}}});
  EXPECT_EQ(delta_cut(split, whole), split);
  EXPECT_EQ(oracle::naive_delta_cut(split, whole), split);
}

TEST(DeltaCutTest, BoundaryLengths) {
  const PairSet x(3, {{kA, {0, 6}}});
  // Intersection [3,6] has length exactly delta: kept.
  EXPECT_EQ(delta_cut(x, PairSet(3, {{kA, {3, 9}}})), PairSet(3, {{kA, {3, 6}}}));
  // Intersection [4,6] has length delta - 1: dropped.
  EXPECT_TRUE(delta_cut(x, PairSet(3, {{kA, {4, 9}}})).empty());
  // Delta 0 keeps a single shared step.
  EXPECT_EQ(delta_cut(PairSet(0, {{kA, {0, 4}}}), PairSet(0, {{kA, {4, 5}}})),
            PairSet(0, {{kA, {4, 4}}}));
}

TEST(DeltaCutTest, MismatchedDeltaThrows) {
  EXPECT_THROW(delta_cut(PairSet(1), PairSet(2)), InvalidArgument);
}

TEST(DeltaCutTest, MatchesNaiveCutAndAlgebraicLaws) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const Time delta = testing::uniform(rng, 0, 4);
    const auto x = testing::random_pair_set(rng, delta, 3, 4);
    const auto y = testing::boundary_partner(rng, x, 3);
    const auto z = testing::random_pair_set(rng, delta, 3, 4);
    const auto xy = delta_cut(x, y);
    ASSERT_EQ(xy, oracle::naive_delta_cut(x, y)) << x << " / " << y;
    ASSERT_TRUE(satisfies_pair_set_invariants(delta, xy.pairs()));
    ASSERT_EQ(xy, delta_cut(y, x));
    ASSERT_EQ(delta_cut(xy, z), delta_cut(x, delta_cut(y, z)));
    for (const auto& p : xy) {
      EXPECT_GE(p.interval.length(), delta);
      EXPECT_TRUE(temporal_membership(p, x));
      EXPECT_TRUE(temporal_membership(p, y));
    }
  }
}

TEST(PairSetEditTest, RemoveAndInsert) {
  const PairSet s(2, {{kB, {0, 5}}, {kC, {2, 8}}});
  EXPECT_EQ(remove_pair(s, {kB, {0, 5}}), PairSet(2, {{kC, {2, 8}}}));
  EXPECT_EQ(remove_pair(s, {kB, {0, 4}}), s);

  const PairSet one(2, {{kB, {6, 9}}});
  EXPECT_EQ(insert_pair(one, {kB, {0, 4}}), PairSet(2, {{kB, {0, 4}}, {kB, {6, 9}}}));
  EXPECT_EQ(insert_pair(one, {kB, {6, 9}}), one);
  EXPECT_THROW(insert_pair(one, {kB, {4, 8}}), InvariantViolation);
  EXPECT_THROW(insert_pair(one, {kA, {0, 1}}), InvariantViolation);
}

}  // namespace
}  // namespace deltaclique
