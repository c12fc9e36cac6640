#pragma once

// Planar primitives over exact rationals: points, axis-parallel unit squares
// with their four quarter regions, closed rectangles, grids, dominance and
// the dihedral symmetries used to bring every case into one orientation.
//
// Coverage is open-interior: a point is inside a square only when both
// coordinate offsets from the center are strictly below 1/2. Quarter
// membership is the closed quarter intersected with that open interior, so a
// point on a midline belongs to both adjacent quarters.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "classcover/rational.hpp"

namespace classcover {

struct Point {
  Rat x;
  Rat y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
};

/// Lexicographic (x, then y).
inline bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

inline std::string to_string(const Point& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

enum class Quadrant : std::uint8_t { NW = 0, SW = 1, SE = 2, NE = 3 };

inline constexpr std::array<Quadrant, 4> kQuadrants = {
    Quadrant::NW, Quadrant::SW, Quadrant::SE, Quadrant::NE};

inline const char* to_string(Quadrant q) {
  switch (q) {
    case Quadrant::NW: return "NW";
    case Quadrant::SW: return "SW";
    case Quadrant::SE: return "SE";
    case Quadrant::NE: return "NE";
  }
  return "?";
}

// -1 for west/south, +1 for east/north.
inline int east_sign(Quadrant q) {
  return (q == Quadrant::SE || q == Quadrant::NE) ? 1 : -1;
}
inline int north_sign(Quadrant q) {
  return (q == Quadrant::NW || q == Quadrant::NE) ? 1 : -1;
}
inline Quadrant quadrant_from_signs(int east, int north) {
  if (east < 0) return north < 0 ? Quadrant::SW : Quadrant::NW;
  return north < 0 ? Quadrant::SE : Quadrant::NE;
}

/// Small value set of quadrants.
class QuadrantSet {
 public:
  constexpr QuadrantSet() = default;
  constexpr QuadrantSet(std::initializer_list<Quadrant> qs) {
    for (Quadrant q : qs) insert(q);
  }

  constexpr void insert(Quadrant q) { bits_ |= bit(q); }
  constexpr bool has(Quadrant q) const { return (bits_ & bit(q)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const {
    int n = 0;
    for (std::uint8_t b = bits_; b != 0; b &= b - 1) ++n;
    return n;
  }
  constexpr std::uint8_t bits() const { return bits_; }

  friend constexpr bool operator==(QuadrantSet a, QuadrantSet b) {
    return a.bits_ == b.bits_;
  }

 private:
  static constexpr std::uint8_t bit(Quadrant q) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(q));
  }
  std::uint8_t bits_ = 0;
};

/// Closed axis-parallel rectangle [x_lo, x_hi] x [y_lo, y_hi].
struct Rect {
  Rat x_lo, x_hi, y_lo, y_hi;

  bool contains_closed(const Point& p) const {
    return x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi;
  }
  bool contains_open(const Point& p) const {
    return x_lo < p.x && p.x < x_hi && y_lo < p.y && p.y < y_hi;
  }
  bool contains(const Rect& r) const {
    return x_lo <= r.x_lo && r.x_hi <= x_hi && y_lo <= r.y_lo && r.y_hi <= y_hi;
  }
  /// True when the open interiors overlap.
  bool interior_meets(const Rect& r) const {
    return x_lo < r.x_hi && r.x_lo < x_hi && y_lo < r.y_hi && r.y_lo < y_hi;
  }
  Point midpoint() const {
    return {Rat((x_lo + x_hi) / 2), Rat((y_lo + y_hi) / 2)};
  }

  friend bool operator==(const Rect& a, const Rect& b) {
    return a.x_lo == b.x_lo && a.x_hi == b.x_hi && a.y_lo == b.y_lo &&
           a.y_hi == b.y_hi;
  }
};

/// Axis-parallel square of side 1, identified by its center. Corners and edge
/// midpoints are derived on demand.
class USquare {
 public:
  USquare() = default;
  explicit USquare(Point center) : center_(std::move(center)) {}

  static USquare centered_at(const Point& c) { return USquare(c); }
  static USquare from_left_bottom(const Rat& left, const Rat& bottom) {
    return USquare({Rat(left + half()), Rat(bottom + half())});
  }
  static USquare from_right_top(const Rat& right, const Rat& top) {
    return USquare({Rat(right - half()), Rat(top - half())});
  }
  static USquare from_sw_vertex(const Point& sw) {
    return from_left_bottom(sw.x, sw.y);
  }

  const Point& center() const { return center_; }
  Rat left() const { return center_.x - half(); }
  Rat right() const { return center_.x + half(); }
  Rat bottom() const { return center_.y - half(); }
  Rat top() const { return center_.y + half(); }

  // a, b, c, d in the usual labelling.
  Point nw_vertex() const { return {left(), top()}; }
  Point sw_vertex() const { return {left(), bottom()}; }
  Point se_vertex() const { return {right(), bottom()}; }
  Point ne_vertex() const { return {right(), top()}; }

  Rect rect() const { return {left(), right(), bottom(), top()}; }

  /// Closed quarter of side 1/2 toward the given corner.
  Rect quarter(Quadrant q) const {
    const Rect r = rect();
    const bool east = east_sign(q) > 0;
    const bool north = north_sign(q) > 0;
    return {east ? center_.x : r.x_lo, east ? r.x_hi : center_.x,
            north ? center_.y : r.y_lo, north ? r.y_hi : center_.y};
  }

  USquare translated(const Rat& dx, const Rat& dy) const {
    return USquare({Rat(center_.x + dx), Rat(center_.y + dy)});
  }

  friend bool operator==(const USquare& a, const USquare& b) {
    return a.center_ == b.center_;
  }

 private:
  Point center_{Rat(0), Rat(0)};
};

inline std::string to_string(const USquare& s) {
  return "square" + to_string(s.center());
}

// ---------------------------------------------------------------------------
// Predicates

inline bool contains_open(const USquare& s, const Point& v) {
  return abs_rat(v.x - s.center().x) < half() &&
         abs_rat(v.y - s.center().y) < half();
}

inline bool in_closed_quarter(const USquare& s, Quadrant q, const Point& v) {
  const Point& c = s.center();
  const bool x_ok = east_sign(q) > 0 ? v.x >= c.x : v.x <= c.x;
  const bool y_ok = north_sign(q) > 0 ? v.y >= c.y : v.y <= c.y;
  return x_ok && y_ok;
}

/// v is inside the open square and on the closed q side of both midlines.
inline bool in_quadrant(const USquare& s, Quadrant q, const Point& v) {
  return contains_open(s, v) && in_closed_quarter(s, q, v);
}

/// Every quadrant whose closed quarter contains v. v must be interior to s.
inline QuadrantSet quadrants_of(const USquare& s, const Point& v) {
  if (!contains_open(s, v))
    throw std::invalid_argument("quadrants_of: point " + to_string(v) +
                                " is not interior to " + to_string(s));
  QuadrantSet out;
  for (Quadrant q : kQuadrants)
    if (in_closed_quarter(s, q, v)) out.insert(q);
  return out;
}

inline bool is_red_free(const USquare& s, std::span<const Point> reds) {
  return std::none_of(reds.begin(), reds.end(),
                      [&](const Point& r) { return contains_open(s, r); });
}

inline bool quadrant_has_red(const USquare& s, Quadrant q,
                             std::span<const Point> reds) {
  return std::any_of(reds.begin(), reds.end(),
                     [&](const Point& r) { return in_quadrant(s, q, r); });
}

inline QuadrantSet dirty_quadrants(const USquare& s,
                                   std::span<const Point> reds) {
  QuadrantSet out;
  for (const Point& r : reds) {
    if (!contains_open(s, r)) continue;
    for (Quadrant q : kQuadrants)
      if (in_closed_quarter(s, q, r)) out.insert(q);
  }
  return out;
}

inline std::vector<Point> reds_in_quadrant(const USquare& s, Quadrant q,
                                           std::span<const Point> reds) {
  std::vector<Point> out;
  for (const Point& r : reds)
    if (in_quadrant(s, q, r)) out.push_back(r);
  return out;
}

// ---------------------------------------------------------------------------
// Symmetries

enum class AxisReflection : std::uint8_t { identity, flip_x, flip_y, flip_both };

/// Element of the symmetry group of the square acting about a pivot:
/// optional transpose (swap of the offsets dx, dy) followed by an axis
/// reflection. flip_x negates dx, flip_y negates dy.
struct Symmetry {
  bool transpose = false;
  AxisReflection flip = AxisReflection::identity;

  constexpr Symmetry() = default;
  constexpr Symmetry(AxisReflection f) : flip(f) {}  // NOLINT: implicit
  constexpr Symmetry(bool t, AxisReflection f) : transpose(t), flip(f) {}

  bool negates_x() const {
    return flip == AxisReflection::flip_x || flip == AxisReflection::flip_both;
  }
  bool negates_y() const {
    return flip == AxisReflection::flip_y || flip == AxisReflection::flip_both;
  }

  Point apply(const Point& p, const Point& pivot) const {
    Rat dx = p.x - pivot.x;
    Rat dy = p.y - pivot.y;
    if (transpose) std::swap(dx, dy);
    if (negates_x()) dx = -dx;
    if (negates_y()) dy = -dy;
    return {Rat(pivot.x + dx), Rat(pivot.y + dy)};
  }
  USquare apply(const USquare& s, const Point& pivot) const {
    return USquare(apply(s.center(), pivot));
  }
  std::vector<Point> apply(std::span<const Point> ps, const Point& pivot) const {
    std::vector<Point> out;
    out.reserve(ps.size());
    for (const Point& p : ps) out.push_back(apply(p, pivot));
    return out;
  }
  Quadrant apply(Quadrant q) const {
    int e = east_sign(q);
    int n = north_sign(q);
    if (transpose) std::swap(e, n);
    if (negates_x()) e = -e;
    if (negates_y()) n = -n;
    return quadrant_from_signs(e, n);
  }
  QuadrantSet apply(QuadrantSet qs) const {
    QuadrantSet out;
    for (Quadrant q : kQuadrants)
      if (qs.has(q)) out.insert(apply(q));
    return out;
  }

  Symmetry inverse() const {
    if (!transpose) return *this;
    // F o T inverted is T o F, which equals F' o T with the flips swapped.
    AxisReflection f = flip;
    if (flip == AxisReflection::flip_x) f = AxisReflection::flip_y;
    else if (flip == AxisReflection::flip_y) f = AxisReflection::flip_x;
    return {true, f};
  }

  friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

inline const char* to_string(AxisReflection t) {
  switch (t) {
    case AxisReflection::identity: return "identity";
    case AxisReflection::flip_x: return "flip-x";
    case AxisReflection::flip_y: return "flip-y";
    case AxisReflection::flip_both: return "flip-both";
  }
  return "?";
}

inline std::string to_string(const Symmetry& s) {
  return std::string(s.transpose ? "transpose+" : "") + to_string(s.flip);
}

/// Fixed search order: the four axis reflections, then their transposed
/// versions.
inline constexpr std::array<Symmetry, 8> kSymmetries = {
    Symmetry{false, AxisReflection::identity},
    Symmetry{false, AxisReflection::flip_x},
    Symmetry{false, AxisReflection::flip_y},
    Symmetry{false, AxisReflection::flip_both},
    Symmetry{true, AxisReflection::identity},
    Symmetry{true, AxisReflection::flip_x},
    Symmetry{true, AxisReflection::flip_y},
    Symmetry{true, AxisReflection::flip_both}};

inline Point reflect(const Point& p, AxisReflection t, const Point& pivot) {
  return Symmetry(t).apply(p, pivot);
}
inline USquare reflect(const USquare& s, AxisReflection t, const Point& pivot) {
  return Symmetry(t).apply(s, pivot);
}
inline std::vector<Point> reflect(std::span<const Point> ps, AxisReflection t,
                                  const Point& pivot) {
  return Symmetry(t).apply(ps, pivot);
}

// ---------------------------------------------------------------------------
// Dominance and staircase-adjacent helpers

/// Points q such that no other point lies strictly beyond q in both
/// coordinates, away from `corner` (for SW: no q' with q.x < q'.x and
/// q.y < q'.y). Duplicates collapse. Output sorted by increasing x, ties by
/// decreasing y.
inline std::vector<Point> dominating_set(std::span<const Point> points,
                                         Quadrant corner) {
  // Map the corner to SW with an axis flip about the origin; flips are
  // involutions so the same map brings results back.
  AxisReflection t = AxisReflection::identity;
  if (corner == Quadrant::SE) t = AxisReflection::flip_x;
  if (corner == Quadrant::NW) t = AxisReflection::flip_y;
  if (corner == Quadrant::NE) t = AxisReflection::flip_both;
  const Point origin{Rat(0), Rat(0)};
  std::vector<Point> pts = reflect(points, t, origin);

  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    if (a.x != b.x) return a.x > b.x;
    return a.y > b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<Point> kept;
  std::optional<Rat> max_y_right;  // max y over strictly larger x
  std::size_t i = 0;
  while (i < pts.size()) {
    std::size_t j = i;
    Rat group_max = pts[i].y;
    while (j < pts.size() && pts[j].x == pts[i].x) {
      if (group_max < pts[j].y) group_max = pts[j].y;
      if (!max_y_right || !(*max_y_right > pts[j].y)) kept.push_back(pts[j]);
      ++j;
    }
    if (!max_y_right || *max_y_right < group_max) max_y_right = group_max;
    i = j;
  }

  std::vector<Point> out = reflect(kept, t, origin);
  std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y > b.y;
  });
  return out;
}

enum class LineOrientation : std::uint8_t { horizontal, vertical };

struct AxisLine {
  LineOrientation orientation;
  Rat value;  // y for horizontal lines, x for vertical ones

  static AxisLine vertical(Rat x) { return {LineOrientation::vertical, std::move(x)}; }
  static AxisLine horizontal(Rat y) {
    return {LineOrientation::horizontal, std::move(y)};
  }
  Rat distance(const Point& p) const {
    return abs_rat((orientation == LineOrientation::vertical ? p.x : p.y) - value);
  }
};

/// Point of minimum perpendicular distance to the line; ties go to the
/// lexicographically smallest point.
inline Point nearest_to_axis_line(std::span<const Point> points,
                                  const AxisLine& line) {
  if (points.empty())
    throw std::invalid_argument("nearest_to_axis_line: empty point set");
  const Point* best = &points[0];
  Rat best_d = line.distance(*best);
  for (const Point& p : points.subspan(1)) {
    const Rat d = line.distance(p);
    if (d < best_d || (d == best_d && lex_less(p, *best))) {
      best = &p;
      best_d = d;
    }
  }
  return *best;
}

// ---------------------------------------------------------------------------
// Grid

/// Grid spanned by the horizontal and vertical lines through a point set
/// with pairwise distinct x and pairwise distinct y. Rows count from the
/// bottom, columns from the right, both starting at 1, so cell(1, 1) is the
/// SE corner cell.
class Grid {
 public:
  Grid() = default;
  Grid(std::vector<Rat> xs, std::vector<Rat> ys)
      : xs_(std::move(xs)), ys_(std::move(ys)) {}

  const std::vector<Rat>& xs() const { return xs_; }
  const std::vector<Rat>& ys() const { return ys_; }

  std::size_t rows() const { return ys_.size() < 2 ? 0 : ys_.size() - 1; }
  std::size_t cols() const { return xs_.size() < 2 ? 0 : xs_.size() - 1; }
  bool has_cells() const { return rows() > 0 && cols() > 0; }

  Rect cell(std::size_t row, std::size_t col) const {
    if (row < 1 || row > rows() || col < 1 || col > cols())
      throw std::out_of_range("Grid::cell: index out of range");
    const std::size_t q = xs_.size();
    return {xs_[q - 1 - col], xs_[q - col], ys_[row - 1], ys_[row]};
  }
  Rect se_cell() const { return cell(1, 1); }
  Rect bounds() const { return {xs_.front(), xs_.back(), ys_.front(), ys_.back()}; }

  Rat width() const { return xs_.back() - xs_.front(); }
  Rat height() const { return ys_.back() - ys_.front(); }

 private:
  std::vector<Rat> xs_;
  std::vector<Rat> ys_;
};

inline Grid build_grid(std::span<const Point> points) {
  std::vector<Rat> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const Point& p : points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
    throw std::invalid_argument("build_grid: duplicate x coordinate");
  if (std::adjacent_find(ys.begin(), ys.end()) != ys.end())
    throw std::invalid_argument("build_grid: duplicate y coordinate");
  return Grid(std::move(xs), std::move(ys));
}

// ---------------------------------------------------------------------------
// Region helpers

/// Sorted distinct values.
inline std::vector<Rat> sorted_unique(std::vector<Rat> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Open sub-rectangles of `region` cut by all square edges that cross it.
/// Each returned cell has positive area and no square edge through its
/// interior, so membership of its midpoint decides the whole cell.
inline std::vector<Rect> arrangement_cells(const Rect& region,
                                           std::span<const USquare> squares) {
  std::vector<Rat> xs{region.x_lo, region.x_hi};
  std::vector<Rat> ys{region.y_lo, region.y_hi};
  for (const USquare& s : squares) {
    for (Rat e : {s.left(), s.right()})
      if (region.x_lo < e && e < region.x_hi) xs.push_back(e);
    for (Rat e : {s.bottom(), s.top()})
      if (region.y_lo < e && e < region.y_hi) ys.push_back(e);
  }
  xs = sorted_unique(std::move(xs));
  ys = sorted_unique(std::move(ys));
  std::vector<Rect> out;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    for (std::size_t j = 0; j + 1 < ys.size(); ++j)
      out.push_back({xs[i], xs[i + 1], ys[j], ys[j + 1]});
  return out;
}

/// True when the closed region lies inside the union of the closed squares.
inline bool covered_by_union(const Rect& region,
                             std::span<const USquare> squares) {
  for (const Rect& cell : arrangement_cells(region, squares)) {
    const Point m = cell.midpoint();
    const bool hit = std::any_of(squares.begin(), squares.end(), [&](const USquare& s) {
      return s.rect().contains_closed(m);
    });
    if (!hit) return false;
  }
  return true;
}

/// A point strictly inside `region` and outside every closed square, if any.
/// Scans arrangement cells in (x, y) order and returns the first free midpoint.
inline std::optional<Point> uncovered_point(const Rect& region,
                                            std::span<const USquare> squares) {
  for (const Rect& cell : arrangement_cells(region, squares)) {
    const Point m = cell.midpoint();
    const bool hit = std::any_of(squares.begin(), squares.end(), [&](const USquare& s) {
      return s.rect().contains_closed(m);
    });
    if (!hit) return m;
  }
  return std::nullopt;
}

}  // namespace classcover
