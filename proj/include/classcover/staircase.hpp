#pragma once

// SW staircase of a blue point u: the flanking reds r1 (NW) and r2 (SE), the
// maximal reds of the SW quarter that survive the R' clip, the polyline they
// span, and the staircase squares pinned between consecutive points.
//
// Only the SW orientation (SW quarter of R(u) has reds, NE quarter is clean)
// is built here. Other orientations go through Symmetry.

#include <span>
#include <stdexcept>
#include <vector>

#include "classcover/geometry.hpp"

namespace classcover {

struct StaircasePoints {
  Point initial;                // r1, or the NW vertex of R(u)
  std::vector<Point> interior;  // q_0..q_k, x ascending, y descending
  Point terminal;               // r2, or the SE vertex of R(u)
  bool initial_is_red = false;
  bool terminal_is_red = false;

  /// r1, q_0, ..., q_k, r2.
  std::vector<Point> sequence() const {
    std::vector<Point> out;
    out.reserve(interior.size() + 2);
    out.push_back(initial);
    out.insert(out.end(), interior.begin(), interior.end());
    out.push_back(terminal);
    return out;
  }
};

/// Alternating vertical/horizontal polyline through the staircase points.
struct Staircase {
  std::vector<Point> stairs;   // the staircase points, in order
  std::vector<Point> corners;  // u'_i = (stairs[i].x, stairs[i+1].y)

  /// Full vertex list: stairs[0], corners[0], stairs[1], ..., stairs.back().
  std::vector<Point> path() const {
    std::vector<Point> out;
    for (std::size_t i = 0; i < stairs.size(); ++i) {
      out.push_back(stairs[i]);
      if (i < corners.size()) out.push_back(corners[i]);
    }
    return out;
  }
  std::size_t vertical_segments() const { return corners.size(); }
  std::size_t horizontal_segments() const { return corners.size(); }
};

struct StaircaseSquares {
  std::vector<USquare> squares;
  std::vector<std::size_t> indices;  // j of each surviving P_j
};

/// Square R' with its left edge through r1 and its bottom edge through r2.
inline USquare clip_square(const StaircasePoints& sp) {
  return USquare::from_left_bottom(sp.initial.x, sp.terminal.y);
}

inline StaircasePoints staircase_points(const Point& u,
                                        std::span<const Point> reds) {
  const USquare ru(u);
  if (!quadrant_has_red(ru, Quadrant::SW, reds) ||
      quadrant_has_red(ru, Quadrant::NE, reds))
    throw std::invalid_argument(
        "staircase_points: need reds in the SW quarter and none in the NE "
        "quarter of R(u) at " + to_string(u));

  StaircasePoints sp;
  const std::vector<Point> nw = reds_in_quadrant(ru, Quadrant::NW, reds);
  const std::vector<Point> se = reds_in_quadrant(ru, Quadrant::SE, reds);
  if (nw.empty()) {
    sp.initial = ru.nw_vertex();
  } else {
    sp.initial = nearest_to_axis_line(nw, AxisLine::vertical(u.x));
    sp.initial_is_red = true;
  }
  if (se.empty()) {
    sp.terminal = ru.se_vertex();
  } else {
    sp.terminal = nearest_to_axis_line(se, AxisLine::horizontal(u.y));
    sp.terminal_is_red = true;
  }

  // Reds on the shared boundary of the two SW quarters are kept.
  const Rect clip_sw = clip_square(sp).quarter(Quadrant::SW);
  std::vector<Point> clipped;
  for (const Point& r : reds)
    if (in_quadrant(ru, Quadrant::SW, r) && clip_sw.contains_closed(r))
      clipped.push_back(r);
  sp.interior = dominating_set(clipped, Quadrant::SW);
  return sp;
}

inline Staircase build_staircase(const StaircasePoints& sp) {
  Staircase st;
  st.stairs = sp.sequence();
  for (std::size_t i = 0; i + 1 < st.stairs.size(); ++i)
    st.corners.push_back({st.stairs[i].x, st.stairs[i + 1].y});
  return st;
}

/// P_j for every consecutive pair of staircase points (left edge through the
/// earlier one, bottom edge through the later one), keeping those whose NE
/// quarter is red free. Order is preserved.
inline StaircaseSquares staircase_squares(const Point& /*u*/,
                                          const StaircasePoints& sp,
                                          std::span<const Point> reds) {
  StaircaseSquares out;
  const std::vector<Point> seq = sp.sequence();
  for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
    const USquare p = USquare::from_left_bottom(seq[j].x, seq[j + 1].y);
    if (quadrant_has_red(p, Quadrant::NE, reds)) continue;
    out.squares.push_back(p);
    out.indices.push_back(j);
  }
  return out;
}

/// Staircase points seen through a symmetry that keeps the SW quarter in
/// place (identity or transpose about u). Transposing reverses the order.
inline StaircasePoints transposed(const StaircasePoints& sp, const Point& u) {
  const Symmetry t{true, AxisReflection::identity};
  StaircasePoints out;
  out.initial = t.apply(sp.terminal, u);
  out.terminal = t.apply(sp.initial, u);
  out.initial_is_red = sp.terminal_is_red;
  out.terminal_is_red = sp.initial_is_red;
  for (auto it = sp.interior.rbegin(); it != sp.interior.rend(); ++it)
    out.interior.push_back(t.apply(*it, u));
  return out;
}

}  // namespace classcover
