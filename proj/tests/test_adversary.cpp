#include <gtest/gtest.h>

#include "support.hpp"

using namespace classcover;
using namespace testsupport;

namespace {

class FixedOpponent final : public CoverStrategy {
 public:
  explicit FixedOpponent(USquare s) : s_(std::move(s)) {}
  const char* name() const override { return "fixed"; }
  void reset(std::span<const Point>) override {}
  std::vector<USquare> cover(const Point&) override { return {s_}; }

 private:
  USquare s_;
};

}  // namespace

TEST(Adversary, InitialReds) {
  const AdversaryState st = adversary_init(3);
  ASSERT_EQ(st.all_reds.size(), 3u);
  EXPECT_EQ(st.all_reds[0], P(0, 0));
  EXPECT_EQ(st.all_reds[1], P(1, 2, 1, 2));
  EXPECT_EQ(st.all_reds[2], P(1, 1));
  EXPECT_THROW(adversary_init(2), std::invalid_argument);
}

TEST(Adversary, NineRedsGiveEightByEightGrid) {
  const AdversaryState st = adversary_init(9);
  EXPECT_EQ(st.grid.xs().size(), 9u);
  EXPECT_EQ(st.grid.ys().size(), 9u);
  EXPECT_TRUE(is_red_free(st.witness, st.all_reds));
  EXPECT_TRUE(st.witness.rect().contains(st.grid.se_cell()));
}

TEST(Adversary, FirstBlueIsCellMidpoint) {
  const AdversaryState st = adversary_init(5);
  const Point b = next_blue(st);
  const Rect c = st.grid.se_cell();
  EXPECT_EQ(b, (Point{Rat((c.x_lo + c.x_hi) / 2), Rat((c.y_lo + c.y_hi) / 2)}));
}

TEST(Adversary, BlueAvoidsPartialOverlap) {
  AdversaryState st = adversary_init(5);
  const Rect c = st.grid.se_cell();
  // Square covering the western half of the SE cell.
  st.opponent_squares.push_back(
      USquare::from_left_bottom(Rat(c.x_lo - 1 + (c.x_hi - c.x_lo) / 2), Rat(c.y_lo - rat(1, 2))));
  const Point b = next_blue(st);
  EXPECT_TRUE(c.contains_open(b));
  EXPECT_FALSE(st.opponent_squares[0].rect().contains_closed(b));
}

TEST(Adversary, CoveredCornerCellIsABreach) {
  AdversaryState st = adversary_init(5);
  const Rect c = st.grid.se_cell();
  st.opponent_squares.push_back(USquare(Point{Rat((c.x_lo + c.x_hi) / 2), Rat((c.y_lo + c.y_hi) / 2)}));
  EXPECT_THROW(next_blue(st), InvariantBreach);
}

TEST(Adversary, ObserveHalvesAndForfeitsOnRed) {
  AdversaryState st = adversary_init(9);
  EXPECT_THROW(observe(st, USquare(P(1, 2, 1, 2))), OpponentForfeit);
  const Point b = next_blue(st);
  ASSERT_TRUE(contains_open(st.witness, b));
  observe(st, st.witness);
  EXPECT_GE(st.active_count() * 2, 9u);
  EXPECT_LT(st.active_count(), 9u);
}

TEST(Adversary, OpponentMissingBlueForfeits) {
  FixedOpponent far(USquare(P(50, 50)));
  EXPECT_THROW(duel(9, far), OpponentForfeit);
  FixedOpponent red(USquare(P(1, 2, 1, 2)));
  EXPECT_THROW(duel(9, red), OpponentForfeit);
}

TEST(Adversary, NineRedsAgainstOnlineAlgorithm) {
  CandidateStrategy s;
  const DuelReport rep = duel(9, s);
  EXPECT_GE(rep.forced, 4u);
  EXPECT_EQ(rep.opt, 1u);
  EXPECT_TRUE(rep.opt_from_oracle);
  EXPECT_TRUE(rep.invariants_held);
}

TEST(Adversary, CenteredOpponentKeepsRoundBound) {
  for (std::size_t m : {3u, 4u, 5u, 8u, 9u, 16u, 33u, 64u, 100u}) {
    CenteredStrategy s;
    const DuelReport rep = duel(m, s);
    EXPECT_TRUE(rep.invariants_held) << m;
    EXPECT_EQ(rep.rounds_played, floor_log2(m) + 1) << m;
    EXPECT_GE(rep.forced, static_cast<std::size_t>(floor_log2(m) + 1)) << m;
    // One square per round, so observations equal completed rounds and the
    // size bound holds in its per-round form.
    for (const RoundRecord& r : rep.rounds) {
      EXPECT_EQ(r.new_squares.size(), 1u);
      EXPECT_GE(r.active_before << (r.round - 1), m) << m << " round " << r.round;
    }
  }
}

TEST(Adversary, WitnessHoldsEveryBlue) {
  for (std::size_t m : {4u, 7u, 12u, 32u}) {
    CandidateStrategy s;
    const DuelReport rep = duel(m, s);
    EXPECT_TRUE(is_red_free(rep.witness, rep.transcript.reds));
    for (const Point& b : rep.transcript.blues) EXPECT_TRUE(contains_open(rep.witness, b));
    for (const RoundRecord& r : rep.rounds) EXPECT_TRUE(r.checks.all()) << m << " " << r.round;
  }
}

TEST(Adversary, FloorLog2) {
  EXPECT_EQ(floor_log2(1), 0);
  EXPECT_EQ(floor_log2(9), 3);
  EXPECT_EQ(floor_log2(1024), 10);
}
