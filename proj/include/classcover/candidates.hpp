#pragma once

// Candidate squares S(u) = {R1, ..., R5} of an uncovered blue point u.
// Slots 1-3 are Type 1 (built from staircase squares), slots 4-5 are Type 2
// (translates of R(u) or of the clip square, repaired by sliding).
//
// The red pattern of R(u)'s quarters is brought to one of four canonical
// forms by a symmetry about u, the construction runs there, and the results
// are mapped back:
//   case 1  NW, SW, SE dirty
//   case 2  SW, NW dirty
//   case 3  NW, SE dirty
//   case 4  SW dirty

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "classcover/geometry.hpp"
#include "classcover/slide.hpp"
#include "classcover/staircase.hpp"

namespace classcover {

enum class CandidateCase : std::uint8_t {
  red_free,           // R(u) itself is clean
  all_dirty,          // every quarter of R(u) has a red; u is not coverable
  case1_infeasible,   // clip square has a red in its NE quarter
  case1_1,
  case1_2,
  case2,
  case3,
  case4,
};

inline const char* to_string(CandidateCase c) {
  switch (c) {
    case CandidateCase::red_free: return "red-free";
    case CandidateCase::all_dirty: return "all-dirty";
    case CandidateCase::case1_infeasible: return "case1-infeasible";
    case CandidateCase::case1_1: return "case1.1";
    case CandidateCase::case1_2: return "case1.2";
    case CandidateCase::case2: return "case2";
    case CandidateCase::case3: return "case3";
    case CandidateCase::case4: return "case4";
  }
  return "?";
}

enum class CandidateType : std::uint8_t { type1, type2 };

struct CandidateSet {
  std::array<std::optional<USquare>, 5> slots;
  CandidateCase case_label = CandidateCase::all_dirty;
  Symmetry orientation;  // maps the input frame to the canonical one

  static constexpr CandidateType type_of(std::size_t slot) {
    return slot < 3 ? CandidateType::type1 : CandidateType::type2;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (const auto& s : slots) n += s.has_value();
    return n;
  }
  bool empty() const { return count() == 0; }

  std::vector<USquare> squares() const {
    std::vector<USquare> out;
    for (const auto& s : slots)
      if (s) out.push_back(*s);
    return out;
  }
  std::vector<USquare> type1() const {
    std::vector<USquare> out;
    for (std::size_t i = 0; i < 3; ++i)
      if (slots[i]) out.push_back(*slots[i]);
    return out;
  }
  std::vector<USquare> type2() const {
    std::vector<USquare> out;
    for (std::size_t i = 3; i < 5; ++i)
      if (slots[i]) out.push_back(*slots[i]);
    return out;
  }
};

using Type1Triple = std::array<std::optional<USquare>, 3>;

namespace detail {

inline std::optional<USquare> keep_if_valid(const USquare& h, const Point& u,
                                            std::span<const Point> reds) {
  if (contains_open(h, u) && is_red_free(h, reds)) return h;
  return std::nullopt;
}

/// Horizontal translate of R(u) with its left edge through `anchor`, repaired
/// on its east side. Shared by case 2 (R5) and case 4 (R5, and R4 through
/// a transpose).
inline std::optional<USquare> east_translate(const Point& u, const Point& anchor,
                                             std::span<const Point> reds) {
  const USquare h = USquare::from_left_bottom(anchor.x, Rat(u.y - half()));
  const bool ne = quadrant_has_red(h, Quadrant::NE, reds);
  const bool se = quadrant_has_red(h, Quadrant::SE, reds);
  if (!ne && !se) return keep_if_valid(h, u, reds);
  if (ne && se) return std::nullopt;
  if (se) return use_rnw_move(u, h, reds);
  // NE only: mirror top and bottom so the dirty quarter becomes SE.
  return conjugated(Symmetry(AxisReflection::flip_y), u, h, reds,
                    [](const Point& v, const USquare& g, std::span<const Point> rs) {
                      return use_rnw_move(v, g, rs);
                    });
}

inline Type1Triple map_triple(const Type1Triple& t, const Symmetry& sym, const Point& u) {
  Type1Triple out;
  for (std::size_t i = 0; i < 3; ++i)
    if (t[i]) out[i] = sym.apply(*t[i], u);
  return out;
}

}  // namespace detail

/// R1, R2, R3 from the first, middle (ceil(l/2)-th) and last SW staircase
/// squares. Requires reds in the SW quarter of R(u) and none in its NE quarter.
inline Type1Triple type1_candidates(const Point& u, std::span<const Point> all_reds) {
  const std::vector<Point> reds = detail::reds_near(u, all_reds);
  const StaircasePoints sp = staircase_points(u, reds);
  const StaircaseSquares ps = staircase_squares(u, sp, reds);
  Type1Triple out;
  const std::size_t l = ps.squares.size();
  if (l == 0) return out;
  const std::array<std::size_t, 3> picks = {0, (l + 1) / 2 - 1, l - 1};

  const Symmetry transpose{true, AxisReflection::identity};
  for (std::size_t i = 0; i < 3; ++i) {
    const USquare& h = ps.squares[picks[i]];
    const bool nw = quadrant_has_red(h, Quadrant::NW, reds);
    const bool se = quadrant_has_red(h, Quadrant::SE, reds);
    if (!nw && !se) {
      out[i] = detail::keep_if_valid(h, u, reds);
    } else if (nw && se) {
      out[i] = use_rnw_move(u, h, reds);
    } else if (nw) {
      out[i] = st_rnw_move(u, h, sp, reds);
    } else {
      // SE only: transposing about u swaps NW and SE and reverses the
      // staircase, so the slide runs upward along it.
      const StaircasePoints tsp = transposed(sp, u);
      out[i] = detail::conjugated(
          transpose, u, h, reds,
          [&](const Point& v, const USquare& g, std::span<const Point> rs) {
            return st_rnw_move(v, g, tsp, rs);
          });
    }
  }
  return out;
}

namespace detail {

inline void fill_type1(CandidateSet& cs, const Type1Triple& t) {
  for (std::size_t i = 0; i < 3; ++i) cs.slots[i] = t[i];
}

// Canonical-frame constructions. reds are already mapped and filtered.

inline void canonical_case1(CandidateSet& cs, const Point& u, std::span<const Point> reds) {
  const USquare ru(u);
  const Point r1 = nearest_to_axis_line(reds_in_quadrant(ru, Quadrant::NW, reds),
                                        AxisLine::vertical(u.x));
  const Point r2 = nearest_to_axis_line(reds_in_quadrant(ru, Quadrant::SE, reds),
                                        AxisLine::horizontal(u.y));
  const USquare clip = USquare::from_left_bottom(r1.x, r2.y);
  if (quadrant_has_red(clip, Quadrant::NE, reds)) {
    cs.case_label = CandidateCase::case1_infeasible;
    return;
  }
  if (!quadrant_has_red(clip, Quadrant::SW, reds)) {
    cs.case_label = CandidateCase::case1_1;
    cs.slots[3] = use_rnw_move(u, clip, reds);
    return;
  }
  cs.case_label = CandidateCase::case1_2;
  fill_type1(cs, type1_candidates(u, reds));
}

inline void canonical_case2(CandidateSet& cs, const Point& u, std::span<const Point> reds) {
  cs.case_label = CandidateCase::case2;
  const USquare ru(u);
  std::vector<Point> west = reds_in_quadrant(ru, Quadrant::NW, reds);
  const std::vector<Point> sw = reds_in_quadrant(ru, Quadrant::SW, reds);
  west.insert(west.end(), sw.begin(), sw.end());
  const Point anchor = nearest_to_axis_line(west, AxisLine::vertical(u.x));

  if (in_quadrant(ru, Quadrant::SW, anchor)) {
    fill_type1(cs, type1_candidates(u, reds));
  } else {
    // Anchor only in NW: build on the NW staircase by mirroring top/bottom.
    const Symmetry fy(AxisReflection::flip_y);
    const std::vector<Point> mirrored = fy.apply(reds, u);
    fill_type1(cs, map_triple(type1_candidates(u, mirrored), fy.inverse(), u));
  }
  cs.slots[4] = east_translate(u, anchor, reds);
}

inline void canonical_case3(CandidateSet& cs, const Point& u, std::span<const Point> reds) {
  cs.case_label = CandidateCase::case3;
  const USquare ru(u);
  const std::vector<Point> nw = reds_in_quadrant(ru, Quadrant::NW, reds);
  const std::vector<Point> se = reds_in_quadrant(ru, Quadrant::SE, reds);

  const Point r1 = nearest_to_axis_line(nw, AxisLine::vertical(u.x));
  const Point r2 = nearest_to_axis_line(se, AxisLine::horizontal(u.y));
  const USquare h4 = USquare::from_left_bottom(r1.x, r2.y);
  if (!quadrant_has_red(h4, Quadrant::NE, reds)) cs.slots[3] = use_rnw_move(u, h4, reds);

  const Point r3 = nearest_to_axis_line(nw, AxisLine::horizontal(u.y));
  const Point r4 = nearest_to_axis_line(se, AxisLine::vertical(u.x));
  const USquare h5 = USquare::from_right_top(r4.x, r3.y);
  if (!quadrant_has_red(h5, Quadrant::SW, reds)) cs.slots[4] = dnw_lse_move(u, h5, reds);
}

inline void canonical_case4(CandidateSet& cs, const Point& u, std::span<const Point> reds) {
  cs.case_label = CandidateCase::case4;
  const USquare ru(u);
  const std::vector<Point> sw = reds_in_quadrant(ru, Quadrant::SW, reds);
  const Point lowest_gap = nearest_to_axis_line(sw, AxisLine::horizontal(u.y));  // r'
  const Point side_gap = nearest_to_axis_line(sw, AxisLine::vertical(u.x));      // r''

  if (!(lowest_gap == side_gap)) fill_type1(cs, type1_candidates(u, reds));

  // R4: vertical translate with its bottom edge through r', i.e. the east
  // translate of the transposed picture.
  const Symmetry t{true, AxisReflection::identity};
  const std::vector<Point> treds = t.apply(reds, u);
  const std::optional<USquare> r4 = east_translate(u, t.apply(lowest_gap, u), treds);
  if (r4) cs.slots[3] = t.inverse().apply(*r4, u);
  cs.slots[4] = east_translate(u, side_gap, reds);
}

inline bool adjacent_pair(QuadrantSet d) {
  return d == QuadrantSet{Quadrant::NW, Quadrant::SW} ||
         d == QuadrantSet{Quadrant::SW, Quadrant::SE} ||
         d == QuadrantSet{Quadrant::SE, Quadrant::NE} ||
         d == QuadrantSet{Quadrant::NE, Quadrant::NW};
}

}  // namespace detail

inline CandidateSet candidate_set(const Point& u, std::span<const Point> all_reds) {
  const std::vector<Point> reds = detail::reds_near(u, all_reds);
  const USquare ru(u);
  const QuadrantSet dirty = dirty_quadrants(ru, reds);

  CandidateSet cs;
  if (dirty.size() == 4) {
    cs.case_label = CandidateCase::all_dirty;
    return cs;
  }
  if (dirty.empty()) {
    cs.case_label = CandidateCase::red_free;
    cs.slots[3] = ru;
    return cs;
  }

  QuadrantSet target;
  void (*build)(CandidateSet&, const Point&, std::span<const Point>) = nullptr;
  if (dirty.size() == 3) {
    target = {Quadrant::NW, Quadrant::SW, Quadrant::SE};
    build = detail::canonical_case1;
  } else if (dirty.size() == 1) {
    target = {Quadrant::SW};
    build = detail::canonical_case4;
  } else if (detail::adjacent_pair(dirty)) {
    target = {Quadrant::SW, Quadrant::NW};
    build = detail::canonical_case2;
  } else {
    target = {Quadrant::NW, Quadrant::SE};
    build = detail::canonical_case3;
  }

  for (const Symmetry& sym : kSymmetries) {
    if (!(sym.apply(dirty) == target)) continue;
    cs.orientation = sym;
    const std::vector<Point> mapped = sym.apply(reds, u);
    build(cs, u, mapped);
    const Symmetry back = sym.inverse();
    for (auto& slot : cs.slots)
      if (slot) slot = back.apply(*slot, u);
    return cs;
  }
  throw std::logic_error("candidate_set: no symmetry reaches the canonical pattern");
}

}  // namespace classcover
