#pragma once

// Adaptive adversary for the online lower bound. m reds sit on the diagonal
// of the unit box. Each round the adversary drops a blue into the SE corner
// cell of the grid spanned by the active reds, away from every square the
// opponent has placed, then discards the half of the active reds on the far
// side of the opponent's new square(s). All blues stay inside one red-free
// witness square, so the offline optimum is 1.
//
// The opponent may answer one blue with several squares. Each round the
// adversary tracks one of them, the square covering the blue, and the
// invariants refer to those tracked squares only. Every distinct square the
// opponent places still counts toward the forced total, and blues avoid the
// untracked squares whenever the corner cell leaves room.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "classcover/geometry.hpp"
#include "classcover/online.hpp"
#include "classcover/oracle.hpp"

namespace classcover {

class OpponentForfeit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// floor(log2 m) for m >= 1.
inline int floor_log2(std::uint64_t m) { return 63 - std::countl_zero(m); }

/// Outcome of the four invariant checks for one round.
struct InvariantCheck {
  bool shrink = true;        // nested, and |active| * 2^(round-1) >= m
  bool cover_free = true;    // every cell has a point outside the tracked squares
  bool blue_in_cell = true;  // blue in the open SE cell and outside the tracked squares
  bool witness = true;       // witness red free and holds every blue
  bool all() const { return shrink && cover_free && blue_in_cell && witness; }
};

struct RoundRecord {
  int round = 0;
  Point blue;
  bool in_corner_cell = true;  // false when placed in the witness fallback
  bool avoided_all = true;     // blue outside every opponent square, tracked or not
  std::size_t active_before = 0;
  std::size_t active_after = 0;
  std::vector<USquare> new_squares;
  USquare tracked{Point{}};    // square covering the blue
  InvariantCheck checks;
};

struct AdversaryState {
  std::size_t m = 0;
  std::vector<Point> all_reds;
  std::size_t lo = 0, hi = 0;  // active reds are all_reds[lo, hi)
  int round = 1;
  std::size_t observations = 0;
  Grid grid;
  USquare witness{Point{}};
  std::vector<USquare> opponent_squares;  // tracked squares, one per finished round
  std::vector<USquare> placed;            // every distinct opponent square
  std::vector<Point> blues;

  std::size_t active_count() const { return hi - lo; }
  std::span<const Point> active() const {
    return std::span<const Point>(all_reds).subspan(lo, hi - lo);
  }
};

namespace detail {

inline Grid diagonal_grid(std::span<const Point> active) {
  std::vector<Rat> ts;
  ts.reserve(active.size());
  for (const Point& p : active) ts.push_back(p.x);
  return Grid(ts, ts);
}

/// Unit square whose left and top edges contain those of the SE cell.
inline USquare witness_for(const Grid& g) {
  const Rect c = g.se_cell();
  return USquare::from_left_bottom(c.x_lo, Rat(c.y_hi - 1));
}

inline void rebuild(AdversaryState& st) {
  st.grid = diagonal_grid(st.active());
  if (st.grid.has_cells()) st.witness = witness_for(st.grid);
}

/// Index range [first, last) of grid intervals whose interior meets (lo, hi).
inline std::pair<std::size_t, std::size_t> interval_span(const std::vector<Rat>& lines,
                                                         const Rat& lo, const Rat& hi) {
  const auto b = std::upper_bound(lines.begin(), lines.end(), lo);
  const auto e = std::lower_bound(lines.begin(), lines.end(), hi);
  std::size_t first = b == lines.begin() ? 0 : static_cast<std::size_t>(b - lines.begin()) - 1;
  std::size_t last = static_cast<std::size_t>(e - lines.begin());
  last = std::min(last, lines.size() - 1);
  return {first, std::max(first, last)};
}

}  // namespace detail

/// True when every cell of g has a point outside all squares. Only cells that
/// a square edge crosses need the arrangement test; a cell that meets a
/// square without being crossed lies inside it.
inline bool grid_cover_free(const Grid& g, std::span<const USquare> squares) {
  if (!g.has_cells()) return true;
  const auto& xs = g.xs();
  const auto& ys = g.ys();
  std::vector<std::pair<std::size_t, std::size_t>> suspects;  // (x interval, y interval)
  for (const USquare& s : squares) {
    const auto [cx0, cx1] = detail::interval_span(xs, s.left(), s.right());
    const auto [cy0, cy1] = detail::interval_span(ys, s.bottom(), s.top());
    std::vector<std::size_t> cut_cols, cut_rows;
    bool inner_col = false, inner_row = false;
    for (std::size_t i = cx0; i < cx1; ++i) {
      if (s.left() <= xs[i] && xs[i + 1] <= s.right()) inner_col = true;
      else cut_cols.push_back(i);
    }
    for (std::size_t j = cy0; j < cy1; ++j) {
      if (s.bottom() <= ys[j] && ys[j + 1] <= s.top()) inner_row = true;
      else cut_rows.push_back(j);
    }
    if (inner_col && inner_row) return false;
    for (std::size_t i : cut_cols)
      for (std::size_t j = cy0; j < cy1; ++j) suspects.emplace_back(i, j);
    for (std::size_t j : cut_rows)
      for (std::size_t i = cx0; i < cx1; ++i) suspects.emplace_back(i, j);
  }
  std::sort(suspects.begin(), suspects.end());
  suspects.erase(std::unique(suspects.begin(), suspects.end()), suspects.end());
  for (const auto& [i, j] : suspects) {
    const Rect cell{xs[i], xs[i + 1], ys[j], ys[j + 1]};
    std::vector<USquare> near;
    for (const USquare& s : squares)
      if (s.rect().interior_meets(cell)) near.push_back(s);
    if (!uncovered_point(cell, near)) return false;
  }
  return true;
}

inline AdversaryState adversary_init(std::size_t m) {
  if (m < 3) throw std::invalid_argument("adversary_init: need m >= 3");
  AdversaryState st;
  st.m = m;
  for (std::size_t i = 0; i < m; ++i) {
    const Rat t = rat(static_cast<long>(i), static_cast<long>(m - 1));
    st.all_reds.push_back({t, t});
  }
  st.lo = 0;
  st.hi = m;
  detail::rebuild(st);
  return st;
}

namespace detail {

inline std::optional<Point> free_point(const Rect& region, std::span<const USquare> squares) {
  std::vector<USquare> near;
  for (const USquare& s : squares)
    if (s.rect().interior_meets(region)) near.push_back(s);
  return uncovered_point(region, near);
}

}  // namespace detail

/// Blue point inside the open SE cell and outside every tracked square.
/// Points also outside the untracked squares are preferred.
inline Point next_blue(const AdversaryState& st) {
  if (!st.grid.has_cells()) throw InvariantBreach("next_blue: active grid has no cells");
  const Rect cell = st.grid.se_cell();
  std::vector<USquare> all = st.placed;
  all.insert(all.end(), st.opponent_squares.begin(), st.opponent_squares.end());
  if (auto p = detail::free_point(cell, all)) return *p;
  if (auto p = detail::free_point(cell, st.opponent_squares)) return *p;
  throw InvariantBreach("next_blue: SE corner cell is covered");
}

inline InvariantCheck check_invariants(const AdversaryState& st, std::size_t prev_lo,
                                       std::size_t prev_hi, const std::optional<Point>& blue,
                                       bool blue_in_cell) {
  InvariantCheck c;
  const mpz_class scaled = mpz_class(static_cast<unsigned long>(st.active_count()))
                           << static_cast<mp_bitcnt_t>(st.round - 1);
  c.shrink = prev_lo <= st.lo && st.hi <= prev_hi && st.active_count() >= 1 &&
             scaled >= static_cast<unsigned long>(st.m);
  c.cover_free = grid_cover_free(st.grid, st.opponent_squares);
  if (blue) {
    bool outside = std::none_of(st.opponent_squares.begin(), st.opponent_squares.end(),
                                [&](const USquare& s) { return s.rect().contains_closed(*blue); });
    bool inside = blue_in_cell ? (st.grid.has_cells() && st.grid.se_cell().contains_open(*blue))
                               : contains_open(st.witness, *blue);
    c.blue_in_cell = outside && inside;
  }
  c.witness = is_red_free(st.witness, st.all_reds) &&
              std::all_of(st.blues.begin(), st.blues.end(),
                          [&](const Point& b) { return contains_open(st.witness, b); });
  return c;
}

/// The two sides an opponent square R with NW vertex a splits the active
/// reds into. a is located in the grid (on a grid line, the cell to its
/// right / below is taken; outside the grid span, the nearest border cell).
/// R_V holds the reds left of that cell's right edge, R_H those above its
/// bottom edge. Both are index ranges into all_reds.
struct Split {
  std::size_t lo_v = 0, hi_v = 0;
  std::size_t lo_h = 0, hi_h = 0;
  std::size_t size_v() const { return hi_v - lo_v; }
  std::size_t size_h() const { return hi_h - lo_h; }
};

inline Split split_active(const AdversaryState& st, const USquare& r) {
  if (!is_red_free(r, st.all_reds))
    throw OpponentForfeit("observe: opponent square " + to_string(r) + " contains a red");
  if (st.active_count() < 2) throw InvariantBreach("observe: fewer than two active reds");
  const Point a = r.nw_vertex();
  const std::span<const Point> act = st.active();
  const std::size_t k = act.size();
  // Right edge: first grid line strictly right of a.x, at least the second.
  std::size_t right = 0;
  while (right < k && act[right].x <= a.x) ++right;
  right = std::clamp<std::size_t>(right, 1, k - 1);
  // Bottom edge: last grid line strictly below a.y, at most the second last.
  std::size_t bottom = k;
  while (bottom > 0 && act[bottom - 1].y >= a.y) --bottom;
  bottom = bottom == 0 ? 0 : bottom - 1;
  bottom = std::clamp<std::size_t>(bottom, 0, k - 2);
  Split sp;
  sp.lo_v = st.lo;
  sp.hi_v = st.lo + right;
  sp.lo_h = st.lo + bottom + 1;
  sp.hi_h = st.hi;
  if (sp.size_v() < k - sp.size_h())
    throw InvariantBreach("observe: R_V and R_H miss an active red for " + to_string(r));
  return sp;
}

namespace detail {

inline void keep_side(AdversaryState& st, const Split& sp, bool vertical) {
  if (vertical) st.hi = sp.hi_v;
  else st.lo = sp.lo_h;
  ++st.observations;
  rebuild(st);
}

}  // namespace detail

/// Keeps the larger of R_V and R_H for opponent square r, ties going to R_V.
inline void observe(AdversaryState& st, const USquare& r) {
  const Split sp = split_active(st, r);
  detail::keep_side(st, sp, sp.size_v() >= sp.size_h());
}

struct DuelReport {
  std::size_t m = 0;
  int rounds_planned = 0;
  int rounds_played = 0;
  std::size_t forced = 0;      // distinct squares the opponent placed
  std::size_t opt = 0;
  bool opt_from_oracle = false;
  Instance transcript;
  USquare witness{Point{}};
  std::vector<RoundRecord> rounds;
  bool invariants_held = true;
  std::string strategy;
};

struct DuelOptions {
  std::size_t oracle_max_m = 16;
  OracleLimits oracle_limits{};
};

/// Plays floor(log2 m) + 1 rounds against `opponent`.
inline DuelReport duel(std::size_t m, CoverStrategy& opponent, const DuelOptions& opt = {}) {
  AdversaryState st = adversary_init(m);
  DuelReport rep;
  rep.m = m;
  rep.strategy = opponent.name();
  rep.rounds_planned = floor_log2(m) + 1;
  opponent.reset(st.all_reds);

  std::size_t prev_lo = st.lo, prev_hi = st.hi;
  for (int round = 1; round <= rep.rounds_planned; ++round) {
    st.round = round;
    RoundRecord rec;
    rec.round = round;
    rec.active_before = st.active_count();

    // Size, cover-free and witness checks for the state entering this round.
    const InvariantCheck entering = check_invariants(st, prev_lo, prev_hi, std::nullopt, true);
    prev_lo = st.lo;
    prev_hi = st.hi;

    Point blue;
    if (st.grid.has_cells()) {
      blue = next_blue(st);
    } else {
      // One red left: any point of the witness outside the tracked squares.
      rec.in_corner_cell = false;
      std::optional<Point> p = detail::free_point(st.witness.rect(), st.placed);
      if (!p) p = detail::free_point(st.witness.rect(), st.opponent_squares);
      if (!p) throw InvariantBreach("duel: witness covered by tracked squares");
      blue = *p;
    }
    rec.blue = blue;
    rec.avoided_all = std::none_of(st.placed.begin(), st.placed.end(),
                                   [&](const USquare& s) { return s.rect().contains_closed(blue); });
    st.blues.push_back(blue);
    // Corner-cell check, and the witness again now that the blue is out.
    const InvariantCheck placed = check_invariants(st, prev_lo, prev_hi, blue, rec.in_corner_cell);

    std::vector<USquare> fresh = opponent.cover(blue);
    for (const USquare& s : fresh)
      if (!is_red_free(s, st.all_reds))
        throw OpponentForfeit("duel: opponent square " + to_string(s) + " contains a red");
    for (const USquare& s : fresh)
      if (std::find(st.placed.begin(), st.placed.end(), s) == st.placed.end())
        st.placed.push_back(s);
    const auto covering = std::find_if(st.placed.begin(), st.placed.end(),
                                       [&](const USquare& s) { return contains_open(s, blue); });
    if (covering == st.placed.end())
      throw OpponentForfeit("duel: opponent left blue " + to_string(blue) + " uncovered");
    // New squares take precedence so the tracked square is one placed now.
    const auto fresh_cover = std::find_if(fresh.begin(), fresh.end(),
                                          [&](const USquare& s) { return contains_open(s, blue); });
    rec.tracked = fresh_cover != fresh.end() ? *fresh_cover : *covering;
    rec.new_squares = fresh;
    st.opponent_squares.push_back(rec.tracked);

    if (round < rep.rounds_planned && st.grid.has_cells()) observe(st, rec.tracked);
    rec.active_after = st.active_count();

    rec.checks.shrink = entering.shrink;
    rec.checks.cover_free = entering.cover_free;
    rec.checks.blue_in_cell = placed.blue_in_cell;
    rec.checks.witness = entering.witness && placed.witness;
    rep.invariants_held = rep.invariants_held && rec.checks.all();
    rep.rounds.push_back(std::move(rec));
    ++rep.rounds_played;
  }

  rep.forced = st.placed.size();
  rep.witness = st.witness;
  rep.transcript.reds = st.all_reds;
  rep.transcript.blues = st.blues;
  if (m <= opt.oracle_max_m) {
    const std::optional<CoverSolution> sol = optimal_cover(rep.transcript, opt.oracle_limits);
    if (!sol) throw InvariantBreach("duel: transcript has an uncoverable blue");
    rep.opt = sol->size();
    rep.opt_from_oracle = true;
  } else {
    rep.opt = 1;
  }
  const bool witness_ok = is_red_free(st.witness, st.all_reds) &&
                          std::all_of(st.blues.begin(), st.blues.end(), [&](const Point& b) {
                            return contains_open(st.witness, b);
                          });
  if (!witness_ok) {
    rep.invariants_held = false;
    if (!rep.opt_from_oracle) rep.opt = 0;  // unknown; no witness
  }
  return rep;
}

}  // namespace classcover
