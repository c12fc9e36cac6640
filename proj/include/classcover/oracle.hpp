#pragma once

// Exact offline optimum for small instances. Square centers are enumerated
// on the arrangement of the lines p.x +- 1/2, p.y +- 1/2; inside each open
// cell of that arrangement the covered blues and the red-emptiness of the
// square are constant, so one representative per cell (its midpoint)
// suffices. Minimum set cover over the resulting blue masks is solved by
// branch and bound.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "classcover/geometry.hpp"

namespace classcover {

struct Instance {
  std::vector<Point> reds;
  std::vector<Point> blues;  // arrival order

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct CoverSolution {
  std::vector<USquare> squares;
  std::vector<std::size_t> assignment;  // blue i -> index into squares

  std::size_t size() const { return squares.size(); }
};

struct OracleLimits {
  std::size_t max_blues = 64;
  std::size_t max_centers = 250000;
  std::uint64_t max_nodes = 50'000'000;
};

class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<Rat> axis_candidates(std::vector<Rat> endpoints) {
  endpoints = sorted_unique(std::move(endpoints));
  std::vector<Rat> out;
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    out.push_back(endpoints[i]);
    if (i + 1 < endpoints.size()) out.push_back((endpoints[i] + endpoints[i + 1]) / 2);
  }
  return out;
}

}  // namespace detail

inline std::vector<Point> canonical_centers(const Instance& inst) {
  std::vector<Rat> xs, ys;
  auto add = [&](const Point& p) {
    xs.push_back(p.x - half());
    xs.push_back(p.x + half());
    ys.push_back(p.y - half());
    ys.push_back(p.y + half());
  };
  for (const Point& p : inst.reds) add(p);
  for (const Point& p : inst.blues) add(p);
  const std::vector<Rat> cx = detail::axis_candidates(std::move(xs));
  const std::vector<Rat> cy = detail::axis_candidates(std::move(ys));
  std::vector<Point> out;
  out.reserve(cx.size() * cy.size());
  for (const Rat& x : cx)
    for (const Rat& y : cy) out.push_back({x, y});
  return out;
}

namespace detail {

struct MaskedSquare {
  std::uint64_t mask;
  USquare square;
};

/// Red-free canonical squares by distinct non-empty blue mask, with masks
/// that are subsets of another mask dropped.
inline std::vector<MaskedSquare> maximal_masks(const Instance& inst, const OracleLimits& lim) {
  if (inst.blues.size() > lim.max_blues || inst.blues.size() > 64)
    throw OracleCapExceeded("oracle: too many blues (" + std::to_string(inst.blues.size()) + ")");
  const std::vector<Point> centers = canonical_centers(inst);
  if (centers.size() > lim.max_centers)
    throw OracleCapExceeded("oracle: too many canonical centers (" +
                            std::to_string(centers.size()) + ")");
  std::vector<MaskedSquare> all;
  for (const Point& c : centers) {
    const USquare s(c);
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < inst.blues.size(); ++i)
      if (contains_open(s, inst.blues[i])) mask |= std::uint64_t{1} << i;
    if (mask == 0 || !is_red_free(s, inst.reds)) continue;
    all.push_back({mask, s});
  }
  // Larger masks first; among equal masks the first center wins.
  std::stable_sort(all.begin(), all.end(), [](const MaskedSquare& a, const MaskedSquare& b) {
    return std::popcount(a.mask) > std::popcount(b.mask);
  });
  std::vector<MaskedSquare> kept;
  for (const MaskedSquare& ms : all) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const MaskedSquare& k) {
      return (ms.mask & ~k.mask) == 0;
    });
    if (!dominated) kept.push_back(ms);
  }
  return kept;
}

class CoverSearch {
 public:
  CoverSearch(const std::vector<MaskedSquare>& sets, std::size_t n, const OracleLimits& lim)
      : sets_(sets), n_(n), lim_(lim), by_blue_(n) {
    full_ = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      max_pop_ = std::max(max_pop_, std::popcount(sets_[s].mask));
      for (std::size_t i = 0; i < n; ++i)
        if (sets_[s].mask >> i & 1) by_blue_[i].push_back(s);
    }
  }

  bool every_blue_coverable() const {
    return std::all_of(by_blue_.begin(), by_blue_.end(),
                       [](const auto& v) { return !v.empty(); });
  }

  std::vector<std::size_t> solve() {
    best_ = greedy();
    std::vector<std::size_t> chosen;
    dfs(0, chosen);
    return best_;
  }

 private:
  std::vector<std::size_t> greedy() const {
    std::vector<std::size_t> out;
    std::uint64_t covered = 0;
    while (covered != full_) {
      std::size_t pick = 0;
      int gain = -1;
      for (std::size_t s = 0; s < sets_.size(); ++s) {
        const int g = std::popcount(sets_[s].mask & ~covered);
        if (g > gain) {
          gain = g;
          pick = s;
        }
      }
      covered |= sets_[pick].mask;
      out.push_back(pick);
    }
    return out;
  }

  void dfs(std::uint64_t covered, std::vector<std::size_t>& chosen) {
    if (++nodes_ > lim_.max_nodes) throw OracleCapExceeded("oracle: node budget exhausted");
    if (covered == full_) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    const int open = std::popcount(full_ & ~covered);
    const std::size_t lower = chosen.size() + static_cast<std::size_t>((open + max_pop_ - 1) / max_pop_);
    if (lower >= best_.size()) return;

    // Branch on the uncovered blue with the fewest options.
    std::size_t pivot = n_;
    for (std::size_t i = 0; i < n_; ++i) {
      if (covered >> i & 1) continue;
      if (pivot == n_ || by_blue_[i].size() < by_blue_[pivot].size()) pivot = i;
    }
    for (std::size_t s : by_blue_[pivot]) {
      chosen.push_back(s);
      dfs(covered | sets_[s].mask, chosen);
      chosen.pop_back();
    }
  }

  const std::vector<MaskedSquare>& sets_;
  std::size_t n_;
  OracleLimits lim_;
  std::vector<std::vector<std::size_t>> by_blue_;  // popcount-descending
  std::uint64_t full_ = 0;
  int max_pop_ = 1;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> best_;
};

}  // namespace detail

/// Minimum number of red-free unit squares covering every blue, or nullopt if
/// some blue lies in no red-free square. Throws OracleCapExceeded.
inline std::optional<CoverSolution> optimal_cover(const Instance& inst,
                                                  const OracleLimits& lim = {}) {
  CoverSolution sol;
  if (inst.blues.empty()) return sol;
  const std::vector<detail::MaskedSquare> sets = detail::maximal_masks(inst, lim);
  detail::CoverSearch search(sets, inst.blues.size(), lim);
  if (!search.every_blue_coverable()) return std::nullopt;
  const std::vector<std::size_t> pick = search.solve();
  for (std::size_t s : pick) sol.squares.push_back(sets[s].square);
  sol.assignment.resize(inst.blues.size());
  for (std::size_t i = 0; i < inst.blues.size(); ++i)
    for (std::size_t k = 0; k < pick.size(); ++k)
      if (sets[pick[k]].mask >> i & 1) {
        sol.assignment[i] = k;
        break;
      }
  return sol;
}

/// True iff some red-free unit square holds v in its open interior.
inline bool is_coverable(const Point& v, std::span<const Point> reds) {
  Instance inst;
  for (const Point& r : reds)
    if (abs_rat(r.x - v.x) < 1 && abs_rat(r.y - v.y) < 1) inst.reds.push_back(r);
  inst.blues = {v};
  for (const Point& c : canonical_centers(inst)) {
    const USquare s(c);
    if (contains_open(s, v) && is_red_free(s, inst.reds)) return true;
  }
  return false;
}

/// Checks that every square is red free and every blue is interior to its
/// assigned square.
inline bool validate_cover(const Instance& inst, const CoverSolution& sol) {
  for (const USquare& s : sol.squares)
    if (!is_red_free(s, inst.reds)) return false;
  if (sol.assignment.size() != inst.blues.size()) return false;
  for (std::size_t i = 0; i < inst.blues.size(); ++i) {
    if (sol.assignment[i] >= sol.squares.size()) return false;
    if (!contains_open(sol.squares[sol.assignment[i]], inst.blues[i])) return false;
  }
  return true;
}

}  // namespace classcover
