#include <gtest/gtest.h>

#include <vector>

#include "uavvlc/archive.hpp"
#include "uavvlc/rng.hpp"

namespace {

using namespace uavvlc;

const Individual kDummy(std::vector<double>(4, 0.0));

TEST(Dominance, Strict) {
  EXPECT_TRUE(dominates({{1, 2, 3}}, {{1, 2, 4}}));
  EXPECT_FALSE(dominates({{1, 2, 3}}, {{1, 2, 3}}));
  EXPECT_FALSE(dominates({{1, 2, 5}}, {{2, 1, 5}}));
}

TEST(ParetoArchive, RejectsDominatedAndDuplicates) {
  ParetoArchive a;
  EXPECT_TRUE(a.insert(kDummy, {{1, 1, 1}}));
  EXPECT_FALSE(a.insert(kDummy, {{1, 1, 1}}));
  EXPECT_FALSE(a.insert(kDummy, {{2, 1, 1}}));
  EXPECT_EQ(a.size(), 1u);
}

TEST(ParetoArchive, EvictsDominatedEntries) {
  ParetoArchive a;
  a.insert(kDummy, {{1, 3, 1}});
  a.insert(kDummy, {{3, 1, 1}});
  EXPECT_EQ(a.size(), 2u);
  EXPECT_TRUE(a.insert(kDummy, {{0.5, 0.5, 0.5}}));
  EXPECT_EQ(a.size(), 1u);
}

TEST(ParetoArchive, CapacityTruncation) {
  ParetoArchive a(10);
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform01();
    const double y = rng.uniform01() * (1 - x);
    a.insert(kDummy, {{x, y, 1 - x - y}});
    EXPECT_LE(a.size(), 10u);
  }
  EXPECT_EQ(a.size(), 10u);
}

TEST(ParetoArchive, TruncationDropsCrowdedPoint) {
  ParetoArchive a(3);
  a.insert(kDummy, {{0, 1, 0.5}});
  a.insert(kDummy, {{1, 0, 0.5}});
  a.insert(kDummy, {{0.5, 0.5, 0.5}});
  a.insert(kDummy, {{0.51, 0.49, 0.5}});
  ASSERT_EQ(a.size(), 3u);
  // The two outer points survive; one of the close middle pair is gone.
  int outer = 0;
  for (const auto& e : a.entries()) {
    outer += e.objectives[0] == 0.0 || e.objectives[0] == 1.0;
  }
  EXPECT_EQ(outer, 2);
}

TEST(ParetoArchive, FuzzMutualNondominance) {
  ParetoArchive a(50);
  Rng rng(9);
  for (int i = 0; i < 2000; ++i) {
    a.insert(kDummy, {{rng.uniform01(), rng.uniform01(), rng.uniform01()}});
    const auto& e = a.entries();
    for (std::size_t p = 0; p < e.size(); ++p) {
      for (std::size_t q = 0; q < e.size(); ++q) {
        ASSERT_FALSE(p != q && dominates(e[p].objectives, e[q].objectives));
      }
    }
  }
}

} // namespace
