#pragma once

// Exact sliding of a unit square. A slide moves the SW vertex of the square
// along an axis-parallel polyline; every quarter-membership predicate is
// constant between consecutive events (a red or u crossing an edge or a
// midline, or a polyline corner), so "move until P holds" is answered by
// testing the events and the midpoints between them in order.
//
// use_rnw_move     up / right repair
// st_rnw_move      slide along the SW staircase, then up / right repair
// dnw_lse_move     down / left repair, the flip-both mirror of use_rnw_move

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "classcover/geometry.hpp"
#include "classcover/staircase.hpp"

namespace classcover {

enum class EventCause : std::uint8_t {
  red_crosses_edge,
  red_crosses_midline,
  staircase_corner,
  u_exits,
};

struct SlideEvent {
  Rat position;
  EventCause cause;
};

/// Trajectory of the SW vertex, parametrised by arc length. Segments are
/// axis-parallel, so arc length is the L1 length and stays rational.
class SlidePath {
 public:
  explicit SlidePath(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("SlidePath: no vertices");
    starts_.push_back(Rat(0));
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
      const Point& a = vertices_[i];
      const Point& b = vertices_[i + 1];
      if (a.x != b.x && a.y != b.y)
        throw std::invalid_argument("SlidePath: segment is not axis-parallel");
      starts_.push_back(starts_.back() + abs_rat(b.x - a.x) + abs_rat(b.y - a.y));
    }
  }

  static SlidePath ray(const Point& from, int dx, int dy, const Rat& length) {
    return SlidePath({from, {Rat(from.x + dx * length), Rat(from.y + dy * length)}});
  }

  const std::vector<Point>& vertices() const { return vertices_; }
  const Rat& length() const { return starts_.back(); }
  std::size_t segments() const { return vertices_.size() - 1; }
  const Rat& segment_start(std::size_t i) const { return starts_[i]; }

  Point at(const Rat& t) const {
    if (t <= 0) return vertices_.front();
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
      if (t <= starts_[i + 1]) {
        const Point& a = vertices_[i];
        const Point& b = vertices_[i + 1];
        const Rat s = t - starts_[i];
        return {Rat(a.x + sgn_rat(b.x - a.x) * s), Rat(a.y + sgn_rat(b.y - a.y) * s)};
      }
    }
    return vertices_.back();
  }

  USquare square_at(const Rat& t) const { return USquare::from_sw_vertex(at(t)); }

  /// Smallest parameter whose point is p, if p lies on the path.
  std::optional<Rat> locate(const Point& p) const {
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
      const Point& a = vertices_[i];
      const Point& b = vertices_[i + 1];
      const bool on_x = (min_rat(a.x, b.x) <= p.x && p.x <= max_rat(a.x, b.x));
      const bool on_y = (min_rat(a.y, b.y) <= p.y && p.y <= max_rat(a.y, b.y));
      if (on_x && on_y) return Rat(starts_[i] + abs_rat(p.x - a.x) + abs_rat(p.y - a.y));
    }
    if (vertices_.size() == 1 && vertices_[0] == p) return Rat(0);
    return std::nullopt;
  }

 private:
  static int sgn_rat(const Rat& r) { return sgn(r); }

  std::vector<Point> vertices_;
  std::vector<Rat> starts_;
};

/// Every parameter in [from, length] where a quarter-membership of a red or
/// the containment of u can change, plus the polyline corners. Sorted.
inline std::vector<SlideEvent> slide_events(const SlidePath& path, const Point& u,
                                            std::span<const Point> reds,
                                            const Rat& from = Rat(0)) {
  std::vector<SlideEvent> events;
  auto push = [&](const Rat& t, EventCause c) {
    if (from <= t && t <= path.length()) events.push_back({t, c});
  };
  const auto& vs = path.vertices();
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    const Point& a = vs[i];
    const Point& b = vs[i + 1];
    const Rat& t0 = path.segment_start(i);
    const Rat& t1 = path.segment_start(i + 1);
    push(t0, EventCause::staircase_corner);
    push(t1, EventCause::staircase_corner);
    if (a == b) continue;
    const bool horizontal = a.y == b.y;
    const Rat& start = horizontal ? a.x : a.y;
    const int dir = sgn(horizontal ? Rat(b.x - a.x) : Rat(b.y - a.y));
    // SW-vertex coordinate s reaches value v at t0 + (v - start) / dir.
    auto at_value = [&](const Rat& v, EventCause c) {
      const Rat t = t0 + (v - start) * dir;
      if (t0 <= t && t <= t1) push(t, c);
    };
    for (const Point& r : reds) {
      const Rat& rc = horizontal ? r.x : r.y;
      at_value(rc - 1, EventCause::red_crosses_edge);
      at_value(rc - half(), EventCause::red_crosses_midline);
      at_value(rc, EventCause::red_crosses_edge);
    }
    const Rat& uc = horizontal ? u.x : u.y;
    at_value(uc - 1, EventCause::u_exits);
    at_value(uc, EventCause::u_exits);
  }
  std::sort(events.begin(), events.end(),
            [](const SlideEvent& l, const SlideEvent& r) { return l.position < r.position; });
  return events;
}

/// Candidate stop parameters in increasing order: `from`, every event, the
/// midpoints between consecutive distinct events, and the path end.
inline std::vector<Rat> stop_candidates(const SlidePath& path,
                                        std::span<const SlideEvent> events,
                                        const Rat& from) {
  std::vector<Rat> marks{from, path.length()};
  for (const SlideEvent& e : events)
    if (from <= e.position) marks.push_back(e.position);
  marks = sorted_unique(std::move(marks));
  std::vector<Rat> out;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    out.push_back(marks[i]);
    if (i + 1 < marks.size()) out.push_back((marks[i] + marks[i + 1]) / 2);
  }
  return out;
}

/// First parameter t >= from at which pred(square at t) holds.
template <class Pred>
std::optional<Rat> first_stop(const SlidePath& path, std::span<const SlideEvent> events,
                              const Rat& from, Pred&& pred) {
  for (const Rat& t : stop_candidates(path, events, from))
    if (pred(path.square_at(t))) return t;
  return std::nullopt;
}

namespace detail {

/// Reds that can ever be interior to a square whose interior holds u.
inline std::vector<Point> reds_near(const Point& u, std::span<const Point> reds) {
  std::vector<Point> out;
  for (const Point& r : reds)
    if (abs_rat(r.x - u.x) < 1 && abs_rat(r.y - u.y) < 1) out.push_back(r);
  return out;
}

/// Moves h straight up (dy = 1) or right (dx = 1) until `clean` has no red,
/// or u leaves the open interior. Returns the square where it stopped.
inline USquare slide_straight(const USquare& h, int dx, int dy, Quadrant clean,
                              const Point& u, std::span<const Point> reds) {
  // u reaches the trailing edge after this much travel.
  const Rat reach = dx != 0 ? Rat(u.x - h.left()) : Rat(u.y - h.bottom());
  if (reach <= 0) return h;
  const SlidePath path = SlidePath::ray(h.sw_vertex(), dx, dy, reach);
  const std::vector<SlideEvent> events = slide_events(path, u, reds);
  const std::optional<Rat> stop = first_stop(path, events, Rat(0), [&](const USquare& s) {
    return !quadrant_has_red(s, clean, reds) || !contains_open(s, u);
  });
  // The path ends with u on the boundary, where the predicate always holds.
  return path.square_at(stop.value_or(path.length()));
}

template <class F>
std::optional<USquare> conjugated(const Symmetry& sym, const Point& u, const USquare& h,
                                  std::span<const Point> reds, F&& move) {
  const std::vector<Point> mapped = sym.apply(reds, u);
  const std::optional<USquare> out = move(u, sym.apply(h, u), std::span<const Point>(mapped));
  if (!out) return std::nullopt;
  return sym.inverse().apply(*out, u);
}

}  // namespace detail

/// Upward/rightward repair. While the NW or SE quarter holds a red and u is
/// interior: move up until the SE quarter is clean, then right until the NW
/// quarter is clean. Returns the final square when it is red free and still
/// holds u.
inline std::optional<USquare> use_rnw_move(const Point& u, USquare h,
                                           std::span<const Point> all_reds) {
  const std::vector<Point> reds = detail::reds_near(u, all_reds);
  const std::size_t guard = 2 * reds.size() + 2;
  std::size_t iterations = 0;
  auto dirty = [&](Quadrant q) { return quadrant_has_red(h, q, reds); };
  while (contains_open(h, u) && (dirty(Quadrant::NW) || dirty(Quadrant::SE))) {
    if (++iterations > guard)
      throw std::logic_error("use_rnw_move: iteration guard exceeded");
    if (dirty(Quadrant::SE)) h = detail::slide_straight(h, 0, 1, Quadrant::SE, u, reds);
    if (!contains_open(h, u)) break;
    if (dirty(Quadrant::NW)) h = detail::slide_straight(h, 1, 0, Quadrant::NW, u, reds);
  }
  if (contains_open(h, u) && is_red_free(h, reds)) return h;
  return std::nullopt;
}

/// Slides h along the staircase of sp (SW vertex moving down and right)
/// until its top half is red free or u leaves, then finishes with
/// use_rnw_move if the SE quarter still has a red.
inline std::optional<USquare> st_rnw_move(const Point& u, USquare h,
                                          const StaircasePoints& sp,
                                          std::span<const Point> all_reds) {
  const SlidePath path(build_staircase(sp).path());
  const std::optional<Rat> t0 = path.locate(h.sw_vertex());
  if (!t0)
    throw std::invalid_argument("st_rnw_move: SW vertex " + to_string(h.sw_vertex()) +
                                " is not on the staircase");
  const std::vector<Point> reds = detail::reds_near(u, all_reds);
  if (!contains_open(h, u)) return std::nullopt;

  auto top_clean = [&](const USquare& s) {
    return !quadrant_has_red(s, Quadrant::NW, reds) &&
           !quadrant_has_red(s, Quadrant::NE, reds);
  };
  if (quadrant_has_red(h, Quadrant::NW, reds)) {
    const std::vector<SlideEvent> events = slide_events(path, u, reds, *t0);
    const std::optional<Rat> stop = first_stop(path, events, *t0, [&](const USquare& s) {
      return top_clean(s) || !contains_open(s, u);
    });
    h = path.square_at(stop.value_or(path.length()));
  }
  if (!contains_open(h, u)) return std::nullopt;
  if (quadrant_has_red(h, Quadrant::SE, reds)) return use_rnw_move(u, h, reds);
  if (is_red_free(h, reds)) return h;
  return std::nullopt;
}

/// Downward/leftward repair: use_rnw_move seen through a half-turn about u.
inline std::optional<USquare> dnw_lse_move(const Point& u, const USquare& h,
                                           std::span<const Point> reds) {
  return detail::conjugated(
      Symmetry(AxisReflection::flip_both), u, h, reds,
      [](const Point& v, const USquare& g, std::span<const Point> rs) {
        return use_rnw_move(v, g, rs);
      });
}

}  // namespace classcover
