#include <gtest/gtest.h>

#include <functional>

#include "support.hpp"

using namespace classcover;
using namespace testsupport;

namespace {

// Naive optimum: candidate edges at every endpoint p +- 1/2 shifted by a
// tiny epsilon both ways, then exhaustive search over subsets by size.
std::optional<std::size_t> naive_opt(const Instance& inst) {
  if (inst.blues.empty()) return 0;
  const Rat eps = rat(1, 4096);
  std::vector<Rat> xs, ys;
  auto push = [&](const Point& p) {
    for (const Rat& o : {rat(-1, 2), rat(1, 2)})
      for (const Rat& e : {Rat(-eps), Rat(0), eps}) {
        xs.push_back(Rat(p.x + o + e));
        ys.push_back(Rat(p.y + o + e));
      }
  };
  for (const Point& p : inst.reds) push(p);
  for (const Point& p : inst.blues) push(p);
  xs = sorted_unique(xs);
  ys = sorted_unique(ys);
  std::vector<std::uint32_t> masks;
  for (const Rat& x : xs)
    for (const Rat& y : ys) {
      const USquare s(Point{x, y});
      if (!is_red_free(s, inst.reds)) continue;
      std::uint32_t mk = 0;
      for (std::size_t i = 0; i < inst.blues.size(); ++i)
        if (contains_open(s, inst.blues[i])) mk |= 1u << i;
      if (mk) masks.push_back(mk);
    }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  const std::uint32_t full = (1u << inst.blues.size()) - 1;
  std::uint32_t any = 0;
  for (auto mk : masks) any |= mk;
  if (any != full) return std::nullopt;
  for (std::size_t k = 1; k <= inst.blues.size(); ++k) {
    std::function<bool(std::size_t, std::size_t, std::uint32_t)> rec =
        [&](std::size_t from, std::size_t left, std::uint32_t acc) {
          if (acc == full) return true;
          if (left == 0) return false;
          for (std::size_t i = from; i < masks.size(); ++i)
            if (rec(i + 1, left - 1, acc | masks[i])) return true;
          return false;
        };
    if (rec(0, k, 0)) return k;
  }
  return inst.blues.size();
}

}  // namespace

TEST(Oracle, CanonicalCenters) {
  EXPECT_TRUE(canonical_centers(Instance{}).empty());
  const Instance one{{}, {P(0, 0)}};
  const auto cs = canonical_centers(one);
  auto has_x = [&](const Rat& x) {
    return std::any_of(cs.begin(), cs.end(), [&](const Point& p) { return p.x == x; });
  };
  EXPECT_TRUE(has_x(rat(-1, 2)));
  EXPECT_TRUE(has_x(rat(0)));
  EXPECT_TRUE(has_x(rat(1, 2)));
  Lattice lat(73, 4);
  for (int it = 0; it < 50; ++it) {
    Instance inst{lat.points(lat.below(5), 0, 12), lat.points(1 + lat.below(5), 0, 12)};
    const std::size_t k = inst.reds.size() + inst.blues.size();
    EXPECT_LE(canonical_centers(inst).size(), (4 * k - 1) * (4 * k - 1));
  }
}

TEST(Oracle, SmallExamples) {
  const auto one = optimal_cover(Instance{{}, {P(0, 0)}});
  ASSERT_TRUE(one);
  EXPECT_EQ(one->size(), 1u);
  const auto two = optimal_cover(Instance{{}, {P(0, 0), P(10, 10)}});
  ASSERT_TRUE(two);
  EXPECT_EQ(two->size(), 2u);
  EXPECT_TRUE(optimal_cover(Instance{}).has_value());
  EXPECT_EQ(optimal_cover(Instance{})->size(), 0u);
  EXPECT_FALSE(optimal_cover(Instance{{P(1, 1)}, {P(1, 1)}}));
}

TEST(Oracle, EdgeStrictlyBetweenPoints) {
  // Blues 0 and 9/10 only fit together if the square edge falls strictly
  // between the red at -1/10 and the blue at 0.
  const Instance inst{{P(-1, 10, 0, 1), P(1, 1)}, {P(0, 0), P(9, 10, 0, 1)}};
  const auto sol = optimal_cover(inst);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->size(), 1u);
  EXPECT_TRUE(validate_cover(inst, *sol));
}

TEST(Oracle, Coverability) {
  EXPECT_TRUE(is_coverable(P(0, 0), {}));
  const std::vector<Point> on{P(0, 0)};
  EXPECT_FALSE(is_coverable(P(0, 0), on));
  const std::vector<Point> ring{P(-1, 8, -1, 8), P(1, 8, -1, 8), P(-1, 8, 1, 8), P(1, 8, 1, 8)};
  EXPECT_FALSE(is_coverable(P(0, 0), ring));
}

TEST(Oracle, MatchesNaiveSearchAtTinyScale) {
  Lattice lat(79, 4);
  for (int it = 0; it < 250; ++it) {
    const Instance inst{lat.points(lat.below(5), 0, 8), lat.points(1 + lat.below(4), 0, 8)};
    const auto sol = optimal_cover(inst);
    const auto naive = naive_opt(inst);
    ASSERT_EQ(sol.has_value(), naive.has_value());
    if (!sol) continue;
    EXPECT_TRUE(validate_cover(inst, *sol));
    EXPECT_EQ(sol->size(), *naive);
  }
}

TEST(Oracle, Monotonicity) {
  Lattice lat(83, 8);
  for (int it = 0; it < 150; ++it) {
    Instance inst{lat.points(lat.below(5), 0, 24), lat.points(1 + lat.below(6), 0, 24)};
    const auto base = optimal_cover(inst);
    if (!base) continue;
    Instance more_blue = inst;
    more_blue.blues.push_back(lat.point(0, 24));
    if (const auto mb = optimal_cover(more_blue)) {
      EXPECT_GE(mb->size(), base->size());
    }
    Instance more_red = inst;
    more_red.reds.push_back(lat.point(0, 24));
    if (const auto mr = optimal_cover(more_red)) {
      EXPECT_GE(mr->size(), base->size());
    }
  }
}

TEST(Oracle, CapIsEnforced) {
  OracleLimits lim;
  lim.max_blues = 2;
  EXPECT_THROW(optimal_cover(Instance{{}, {P(0, 0), P(3, 3), P(6, 6)}}, lim), OracleCapExceeded);
}
