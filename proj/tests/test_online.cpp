#include <gtest/gtest.h>

#include "support.hpp"

using namespace classcover;
using namespace testsupport;

TEST(Online, FreshState) {
  const std::vector<Point> none;
  OnlineState st(none);
  EXPECT_FALSE(st.is_covered(P(0, 0)));
  EXPECT_EQ(st.processed(), 0u);

  std::vector<Point> diag;
  for (long i = 0; i < 9; ++i) diag.push_back({rat(i, 8), rat(i, 8)});
  EXPECT_EQ(OnlineState(diag).reds().size(), 9u);

  const std::vector<Point> dup{P(1, 1), P(1, 1), P(2, 3)};
  EXPECT_EQ(OnlineState(dup).reds().size(), 2u);
}

TEST(Online, FirstBluePlacesCenteredSquare) {
  const std::vector<Point> none;
  OnlineState st(none);
  const ProcessResult r = st.process(P(1, 2, 1, 3));
  ASSERT_TRUE(std::holds_alternative<Placed>(r));
  ASSERT_EQ(std::get<Placed>(r).squares.size(), 1u);
  EXPECT_EQ(std::get<Placed>(r).squares[0], USquare(P(1, 2, 1, 3)));
  EXPECT_EQ(st.slot_histogram()[3], 1u);
  EXPECT_TRUE(st.is_covered(P(1, 2, 1, 3)));
}

TEST(Online, CoverageIsOpen) {
  const std::vector<Point> none;
  OnlineState st(none);
  st.process(P(0, 0));
  EXPECT_FALSE(st.is_covered(P(1, 2, 0, 1)));
  EXPECT_FALSE(st.is_covered(P(1, 2, 1, 2)));
  EXPECT_TRUE(st.is_covered(P(49, 100, 0, 1)));
}

TEST(Online, AlreadyCoveredLeavesStateUnchanged) {
  const std::vector<Point> none;
  OnlineState st(none);
  st.process(P(0, 0));
  const ProcessResult r = st.process(P(1, 4, 1, 4));
  EXPECT_TRUE(std::holds_alternative<AlreadyCovered>(r));
  EXPECT_EQ(st.placed().size(), 1u);
  EXPECT_EQ(st.processed(), 2u);
}

TEST(Online, BlueOnRedIsRejected) {
  const std::vector<Point> reds{P(1, 1)};
  OnlineState st(reds);
  EXPECT_TRUE(std::holds_alternative<Uncoverable>(st.process(P(1, 1))));
  EXPECT_TRUE(st.placed().empty());
  ASSERT_EQ(st.rejected().size(), 1u);
  EXPECT_EQ(st.rejected()[0].blue_index, 0u);
}

TEST(Online, CoincidentSlotsStoredOnce) {
  // A single surviving staircase square fills all three type-1 slots.
  const std::vector<Point> reds{P(-1, 4, -1, 4), P(1, 4, 5, 8)};
  OnlineState st(reds);
  const ProcessResult r = st.process(P(0, 0));
  ASSERT_TRUE(std::holds_alternative<Placed>(r));
  const auto& sq = std::get<Placed>(r).squares;
  for (std::size_t i = 0; i < sq.size(); ++i)
    for (std::size_t j = i + 1; j < sq.size(); ++j) EXPECT_FALSE(sq[i] == sq[j]);
}

TEST(Online, PrefixInvariantsOnRandomStreams) {
  Lattice lat(61, 8);
  for (int it = 0; it < 300; ++it) {
    const std::vector<Point> reds = lat.points(lat.below(9), 0, 32);
    OnlineState st(reds);
    std::vector<Point> blues;
    std::size_t prev = 0;
    for (int k = 0; k < 8; ++k) {
      const Point b = lat.point(0, 32);
      blues.push_back(b);
      const bool was_covered = st.is_covered(b);
      const ProcessResult r = st.process(b);
      const std::size_t added = st.placed().size() - prev;
      EXPECT_LE(added, 5u);
      if (was_covered) {
        EXPECT_EQ(added, 0u);
      }
      // Earlier squares are never touched.
      prev = st.placed().size();
      for (const PlacedSquare& p : st.placed()) EXPECT_TRUE(is_red_free(p.square, reds));
      std::size_t ri = 0;
      for (std::size_t i = 0; i < blues.size(); ++i) {
        const bool rejected = ri < st.rejected().size() && st.rejected()[ri].blue_index == i;
        if (rejected) {
          ++ri;
          EXPECT_FALSE(is_coverable(blues[i], reds));
        } else {
          EXPECT_TRUE(st.is_covered(blues[i]));
        }
      }
      if (std::holds_alternative<Placed>(r)) {
        EXPECT_TRUE(st.is_covered(b));
      }
    }
  }
}

TEST(Online, EmptyRedsReduceToCenteredScheme) {
  Lattice lat(67, 8);
  const std::vector<Point> none;
  for (int it = 0; it < 200; ++it) {
    OnlineState st(none);
    for (int k = 0; k < 8; ++k) {
      const Point b = lat.point(0, 32);
      const bool covered = st.is_covered(b);
      const ProcessResult r = st.process(b);
      if (covered) continue;
      ASSERT_TRUE(std::holds_alternative<Placed>(r));
      ASSERT_EQ(std::get<Placed>(r).squares.size(), 1u);
      EXPECT_EQ(std::get<Placed>(r).squares[0].center(), b);
    }
  }
}

TEST(Online, StrategiesByName) {
  EXPECT_STREQ(make_strategy("candidate")->name(), "candidate");
  EXPECT_STREQ(make_strategy("centered")->name(), "centered");
  EXPECT_THROW(make_strategy("greedy"), std::invalid_argument);
}

TEST(Online, CenteredStrategyPlacesOneSquarePerUncoveredBlue) {
  Lattice lat(71, 8);
  for (int it = 0; it < 200; ++it) {
    const std::vector<Point> reds = lat.points(lat.below(6), 0, 32);
    CenteredStrategy s;
    s.reset(reds);
    std::vector<USquare> placed;
    for (int k = 0; k < 8; ++k) {
      const Point b = lat.point(0, 32);
      const auto fresh = s.cover(b);
      EXPECT_LE(fresh.size(), 1u);
      for (const USquare& q : fresh) {
        EXPECT_TRUE(contains_open(q, b));
        EXPECT_TRUE(is_red_free(q, reds));
      }
      placed.insert(placed.end(), fresh.begin(), fresh.end());
    }
  }
}
