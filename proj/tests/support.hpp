#pragma once

// Hand-rolled generators and brute-force references shared by the tests.

#include <cstdint>
#include <random>
#include <vector>

#include "classcover/classcover.hpp"

namespace testsupport {

using namespace classcover;

/// Lattice sampler: coordinates k/den with k in [lo, hi].
class Lattice {
 public:
  Lattice(std::uint64_t seed, long den) : rng_(seed), den_(den) {}
  long den() const { return den_; }
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  Rat coord(long lo, long hi) {
    return rat(lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))), den_);
  }
  Point point(long lo, long hi) {
    Rat x = coord(lo, hi);
    Rat y = coord(lo, hi);
    return {x, y};
  }
  std::vector<Point> points(std::size_t count, long lo, long hi) {
    std::vector<Point> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(point(lo, hi));
    return out;
  }

 private:
  std::mt19937_64 rng_;
  long den_;
};

inline Point P(long x, long y) { return {rat(x), rat(y)}; }
inline Point P(long xn, long xd, long yn, long yd) { return {rat(xn, xd), rat(yn, yd)}; }

/// Brute-force check for a red-free square around v: scan centers on a fine
/// lattice. Exact when all inputs live on the 1/den lattice and step divides
/// 1/(2 den).
inline bool coverable_by_scan(const Point& v, const std::vector<Point>& reds, long steps) {
  for (long i = -steps + 1; i < steps; ++i)
    for (long j = -steps + 1; j < steps; ++j) {
      const USquare s({Rat(v.x + rat(i, 2 * steps)), Rat(v.y + rat(j, 2 * steps))});
      if (is_red_free(s, reds)) return true;
    }
  return false;
}

// ---------------------------------------------------------------------------
// Brute-force slide reference: scan the path at a fixed step instead of
// jumping between events.

inline const Rat& scan_step() {
  static const Rat step = rat(1, 2048);
  return step;
}

template <class Pred>
Rat brute_first_stop(const SlidePath& path, const Rat& from, Pred&& pred) {
  for (Rat t = from; t <= path.length(); t += scan_step())
    if (pred(path.square_at(t))) return t;
  return path.length();
}

inline USquare brute_slide_straight(const USquare& h, int dx, int dy, Quadrant clean,
                                    const Point& u, std::span<const Point> reds) {
  const Rat reach = dx != 0 ? Rat(u.x - h.left()) : Rat(u.y - h.bottom());
  if (reach <= 0) return h;
  const SlidePath path = SlidePath::ray(h.sw_vertex(), dx, dy, reach);
  return path.square_at(brute_first_stop(path, Rat(0), [&](const USquare& s) {
    return !quadrant_has_red(s, clean, reds) || !contains_open(s, u);
  }));
}

inline std::optional<USquare> brute_use_rnw_move(const Point& u, USquare h,
                                                 std::span<const Point> all_reds) {
  const std::vector<Point> reds = detail::reds_near(u, all_reds);
  auto dirty = [&](Quadrant q) { return quadrant_has_red(h, q, reds); };
  for (std::size_t guard = 0; guard < 4 * reds.size() + 4; ++guard) {
    if (!contains_open(h, u) || !(dirty(Quadrant::NW) || dirty(Quadrant::SE))) break;
    if (dirty(Quadrant::SE)) h = brute_slide_straight(h, 0, 1, Quadrant::SE, u, reds);
    if (!contains_open(h, u)) break;
    if (dirty(Quadrant::NW)) h = brute_slide_straight(h, 1, 0, Quadrant::NW, u, reds);
  }
  if (contains_open(h, u) && is_red_free(h, reds)) return h;
  return std::nullopt;
}

/// Stop parameter of the staircase slide alone (before any vertical repair).
inline Rat brute_staircase_stop(const Point& u, const USquare& h, const StaircasePoints& sp,
                                std::span<const Point> reds) {
  const SlidePath path(build_staircase(sp).path());
  const Rat t0 = path.locate(h.sw_vertex()).value();
  return brute_first_stop(path, t0, [&](const USquare& s) {
    return (!quadrant_has_red(s, Quadrant::NW, reds) && !quadrant_has_red(s, Quadrant::NE, reds)) ||
           !contains_open(s, u);
  });
}

inline std::optional<USquare> brute_st_rnw_move(const Point& u, USquare h,
                                                const StaircasePoints& sp,
                                                std::span<const Point> all_reds) {
  const std::vector<Point> reds = detail::reds_near(u, all_reds);
  if (!contains_open(h, u)) return std::nullopt;
  if (quadrant_has_red(h, Quadrant::NW, reds)) {
    const SlidePath path(build_staircase(sp).path());
    h = path.square_at(brute_staircase_stop(u, h, sp, reds));
  }
  if (!contains_open(h, u)) return std::nullopt;
  if (quadrant_has_red(h, Quadrant::SE, reds)) return brute_use_rnw_move(u, h, reds);
  if (is_red_free(h, reds)) return h;
  return std::nullopt;
}

/// Event-driven staircase stop, mirroring the first phase of st_rnw_move.
inline Rat event_staircase_stop(const Point& u, const USquare& h, const StaircasePoints& sp,
                                std::span<const Point> reds) {
  const SlidePath path(build_staircase(sp).path());
  const Rat t0 = path.locate(h.sw_vertex()).value();
  const std::vector<SlideEvent> events = slide_events(path, u, reds, t0);
  return first_stop(path, events, t0, [&](const USquare& s) {
           return (!quadrant_has_red(s, Quadrant::NW, reds) &&
                   !quadrant_has_red(s, Quadrant::NE, reds)) ||
                  !contains_open(s, u);
         }).value_or(path.length());
}

struct SlideCase {
  Point u;
  USquare h{Point{}};
  std::vector<Point> reds;
  std::optional<StaircasePoints> sp;  // set for staircase cases
};

/// Random use_rnw_move input on the 1/32 lattice: H holds u and has a clean
/// closed SW quarter.
inline SlideCase random_rnw_case(Lattice& lat) {
  for (;;) {
    SlideCase c;
    c.u = lat.point(-4, 4);
    c.h = USquare(lat.point(-12, 12));
    if (!contains_open(c.h, c.u)) continue;
    c.reds = lat.points(1 + lat.below(8), -30, 30);
    if (quadrant_has_red(c.h, Quadrant::SW, c.reds)) continue;
    return c;
  }
}

/// Random st_rnw_move input: H is a SW staircase square of u with a dirty
/// NW quarter.
inline SlideCase random_staircase_case(Lattice& lat) {
  for (;;) {
    SlideCase c;
    c.u = lat.point(-4, 4);
    c.reds = lat.points(2 + lat.below(8), -30, 30);
    const USquare ru(c.u);
    if (!quadrant_has_red(ru, Quadrant::SW, c.reds) || quadrant_has_red(ru, Quadrant::NE, c.reds))
      continue;
    const StaircasePoints sp = staircase_points(c.u, c.reds);
    const StaircaseSquares ps = staircase_squares(c.u, sp, c.reds);
    std::vector<USquare> dirty;
    for (const USquare& p : ps.squares)
      if (quadrant_has_red(p, Quadrant::NW, c.reds)) dirty.push_back(p);
    if (dirty.empty()) continue;
    c.h = dirty[lat.below(dirty.size())];
    c.sp = sp;
    return c;
  }
}

}  // namespace testsupport
