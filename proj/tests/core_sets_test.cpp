#include <gtest/gtest.h>

#include <random>

#include "hypalg/core_sets.hpp"
#include "hypalg/generators.hpp"
#include "support/oracles.hpp"

using namespace hypalg;

namespace {

PointSet from_mask(int n, std::uint64_t mask) {
  std::vector<Point> pts;
  for (Point x = 0; x < (Point{1} << n); ++x) {
    if ((mask >> x) & 1U) pts.push_back(x);
  }
  return PointSet(n, pts);
}

}  // namespace

TEST(PointSet, RejectsDuplicatesAndOutOfRange) {
  EXPECT_THROW(PointSet(3, {1, 1}), DomainError);
  EXPECT_THROW(PointSet(3, {8}), DomainError);
  EXPECT_THROW(PointSet(0, {}), DomainError);
  EXPECT_THROW(PointSet(31, {}), DomainError);
  EXPECT_NO_THROW(PointSet(30, {full_mask(30)}));
}

TEST(PointSet, SortedAndSearchable) {
  PointSet c(3, {5, 0, 3});
  EXPECT_EQ(std::vector<Point>(c.begin(), c.end()), (std::vector<Point>{0, 3, 5}));
  EXPECT_TRUE(c.contains(3));
  EXPECT_FALSE(c.contains(4));
}

TEST(Subsets, GradedOrder) {
  std::vector<Subset> all;
  for (Subset s = 0; s < 8; ++s) all.push_back(s);
  std::sort(all.begin(), all.end(), graded_less);
  // ∅, {1}, {2}, {3}, {1,2}, {1,3}, {2,3}, {1,2,3}
  EXPECT_EQ(all, (std::vector<Subset>{0, 1, 2, 4, 3, 5, 6, 7}));
}

TEST(Subsets, ListOrder) {
  std::vector<Subset> all{0, 1, 2, 3, 4, 5, 6, 7};
  std::sort(all.begin(), all.end(), list_less);
  // [], [1], [1,2], [1,2,3], [1,3], [2], [2,3], [3]
  EXPECT_EQ(all, (std::vector<Subset>{0, 1, 3, 7, 5, 2, 6, 4}));
}

TEST(Shattering, MatchesOracleOnEverySetInThreeDimensions) {
  for (std::uint64_t mask = 1; mask < 256; ++mask) {
    const auto c = from_mask(3, mask);
    const auto cube = oracle::cube_of(c);
    EXPECT_EQ(oracle::to_index_sets(shattered_family(c)), oracle::shattered(cube, 3)) << mask;
    EXPECT_EQ(oracle::to_index_sets(strongly_shattered_family(c)),
              oracle::strongly_shattered(cube, 3))
        << mask;
  }
}

TEST(Shattering, MatchesOracleOnRandomSets) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 3;
    const auto c = random_point_set(n, 1 + rng() % (std::size_t{1} << n), rng);
    const auto cube = oracle::cube_of(c);
    EXPECT_EQ(oracle::to_index_sets(shattered_family(c)), oracle::shattered(cube, n));
    EXPECT_EQ(oracle::to_index_sets(strongly_shattered_family(c)),
              oracle::strongly_shattered(cube, n));
  }
}

TEST(Shattering, MissingPatternIsReallyMissing) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = random_point_set(6, 1 + rng() % 20, rng);
    const Subset i = static_cast<Subset>(rng() % 64);
    const auto gap = missing_pattern(c, i);
    EXPECT_EQ(gap.has_value(), !is_shattered(c, i));
    if (gap) {
      EXPECT_EQ(gap->support, i);
      for (Point p : c) EXPECT_NE(p & i, gap->values);
    }
  }
}

TEST(Shattering, WitnessSubcubeLiesInC) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = random_point_set(5, 8 + rng() % 20, rng);
    for (Subset i : strongly_shattered_family(c)) {
      const auto w = strong_shattering_witness(c, i);
      ASSERT_TRUE(w.has_value());
      for (Subset free = 0;; free = (free - i) & i) {
        EXPECT_TRUE(c.contains(w->values | free));
        if (free == i) break;
      }
    }
  }
}

TEST(Shattering, EmptySetIsShatteredByNonemptySets) {
  PointSet c(4, {6});
  EXPECT_TRUE(is_shattered(c, 0));
  EXPECT_TRUE(is_strongly_shattered(c, 0));
  EXPECT_EQ(vc_dimension(c), 0);
  EXPECT_THROW(vc_dimension(PointSet(4, {})), DomainError);
  EXPECT_THROW(is_shattered(c, coordinate_bit(5)), DomainError);
}

TEST(Shattering, FamiliesAreDownwardClosed) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = random_point_set(6, 1 + rng() % 64, rng);
    EXPECT_TRUE(is_downward_closed(shattered_family(c)));
    EXPECT_TRUE(is_downward_closed(strongly_shattered_family(c)));
    EXPECT_TRUE(strongly_shattered_family(c).is_subfamily_of(shattered_family(c)));
  }
}

TEST(Shattering, FullCubeAndStandardBasis) {
  const auto cube = PointSet::cube(4);
  EXPECT_EQ(shattered_family(cube).size(), 16U);
  EXPECT_EQ(strongly_shattered_family(cube).size(), 16U);
  const auto e = standard_basis(3, 3);
  EXPECT_EQ(oracle::to_index_sets(shattered_family(e)),
            (std::set<oracle::IndexSet>{{}, {1}, {2}, {3}}));
  EXPECT_EQ(oracle::to_index_sets(strongly_shattered_family(e)),
            (std::set<oracle::IndexSet>{{}}));
}

TEST(Sandwich, HoldsOnEverySetInThreeDimensions) {
  for (std::uint64_t mask = 1; mask < 256; ++mask) {
    const auto c = from_mask(3, mask);
    EXPECT_LE(strongly_shattered_family(c).size(), c.size());
    EXPECT_LE(c.size(), shattered_family(c).size());
  }
}

TEST(Shift, DownShiftMatchesOracle) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 4;
    const auto c = random_point_set(n, 1 + rng() % (std::size_t{1} << n), rng);
    const int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const auto shifted = down_shift(c, i);
    EXPECT_EQ(shifted.size(), c.size());
    EXPECT_EQ(oracle::cube_of(shifted), oracle::down_shift(oracle::cube_of(c), i));
  }
}

TEST(Shift, FullShiftIsDownwardClosedAndSizePreserving) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 4;
    const auto c = random_point_set(n, 1 + rng() % (std::size_t{1} << n), rng);
    const auto d = full_shift(c);
    EXPECT_EQ(d.size(), c.size());
    EXPECT_TRUE(is_downward_closed(d));
    auto cube = oracle::cube_of(c);
    for (int i = 1; i <= n; ++i) cube = oracle::down_shift(cube, i);
    EXPECT_EQ(oracle::to_index_sets(d), oracle::as_index_sets(cube));
    // Shifting never creates shattered sets and never destroys strong ones.
    EXPECT_TRUE(strongly_shattered_family(c).is_subfamily_of(d));
    EXPECT_TRUE(d.is_subfamily_of(shattered_family(c)));
  }
}

TEST(Shift, RejectsBadCoordinate) {
  PointSet c(3, {1});
  EXPECT_THROW(down_shift(c, 0), DomainError);
  EXPECT_THROW(down_shift(c, 4), DomainError);
}

TEST(Family, DownwardClosure) {
  const std::vector<Subset> seeds{0b101};
  const auto f = downward_closure(3, seeds);
  EXPECT_EQ(oracle::to_index_sets(f), (std::set<oracle::IndexSet>{{}, {1}, {3}, {1, 3}}));
  EXPECT_TRUE(is_downward_closed(f));
  EXPECT_FALSE(is_downward_closed(SetFamily(3, {0b11})));
}

TEST(Family, CountsAndLookups) {
  const auto f = SetFamily::up_to_size(4, 2);
  EXPECT_EQ(f.size(), 11U);
  EXPECT_EQ(f.count_up_to(1), 5U);
  EXPECT_EQ(f.max_member_size(), 2);
  EXPECT_TRUE(f.index_of(0b1001).has_value());
  EXPECT_FALSE(f.contains(0b111));
  EXPECT_THROW(SetFamily(3, {0b1000}), DomainError);
}

TEST(Family, AllDownwardClosedOnThreeMatchesOracle) {
  const auto ours = all_downward_closed(3);
  const auto ref = oracle::downward_closed_families(3);
  std::set<std::set<oracle::IndexSet>> a, b(ref.begin(), ref.end());
  for (const auto& f : ours) a.insert(oracle::to_index_sets(f));
  EXPECT_EQ(a, b);
  EXPECT_EQ(ours.size(), 19U);
}
