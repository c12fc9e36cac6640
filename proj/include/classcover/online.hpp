#pragma once

// Online cover: blues arrive one at a time; an uncovered blue gets its whole
// candidate set appended to the solution. Nothing placed is ever removed.

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "classcover/candidates.hpp"
#include "classcover/geometry.hpp"

namespace classcover {

struct PlacedSquare {
  USquare square;
  std::size_t blue_index;  // arrival index of the blue that triggered it
  std::size_t slot;        // 0-based candidate slot
};

struct Rejection {
  std::size_t blue_index;
  Point blue;
};

struct AlreadyCovered {};
struct Placed {
  std::vector<USquare> squares;
};
struct Uncoverable {};

using ProcessResult = std::variant<AlreadyCovered, Placed, Uncoverable>;

class OnlineState {
 public:
  explicit OnlineState(std::span<const Point> reds) {
    reds_.assign(reds.begin(), reds.end());
    std::sort(reds_.begin(), reds_.end(), lex_less);
    reds_.erase(std::unique(reds_.begin(), reds_.end()), reds_.end());
  }
  OnlineState() = default;

  const std::vector<Point>& reds() const { return reds_; }
  const std::vector<PlacedSquare>& placed() const { return placed_; }
  const std::vector<Rejection>& rejected() const { return rejected_; }
  std::size_t processed() const { return processed_; }
  /// How often each candidate slot contributed a square.
  const std::array<std::size_t, 5>& slot_histogram() const { return slot_hist_; }

  std::vector<USquare> squares() const {
    std::vector<USquare> out;
    out.reserve(placed_.size());
    for (const PlacedSquare& p : placed_) out.push_back(p.square);
    return out;
  }

  bool is_covered(const Point& v) const {
    return std::any_of(placed_.begin(), placed_.end(),
                       [&](const PlacedSquare& p) { return contains_open(p.square, v); });
  }

  ProcessResult process(const Point& blue) {
    const std::size_t index = processed_++;
    if (is_covered(blue)) return AlreadyCovered{};
    const CandidateSet cs = candidate_set(blue, reds_);
    if (cs.empty()) {
      rejected_.push_back({index, blue});
      return Uncoverable{};
    }
    Placed out;
    for (std::size_t slot = 0; slot < cs.slots.size(); ++slot) {
      if (!cs.slots[slot]) continue;
      const USquare& s = *cs.slots[slot];
      if (std::find(out.squares.begin(), out.squares.end(), s) != out.squares.end()) continue;
      out.squares.push_back(s);
      placed_.push_back({s, index, slot});
      ++slot_hist_[slot];
    }
    return out;
  }

 private:
  std::vector<Point> reds_;
  std::vector<PlacedSquare> placed_;
  std::vector<Rejection> rejected_;
  std::size_t processed_ = 0;
  std::array<std::size_t, 5> slot_hist_{};
};

/// An online cover algorithm as seen by the harness and the adversary.
class CoverStrategy {
 public:
  virtual ~CoverStrategy() = default;
  virtual const char* name() const = 0;
  virtual void reset(std::span<const Point> reds) = 0;
  /// Squares placed in response to `blue` (empty if it was already covered
  /// or cannot be covered).
  virtual std::vector<USquare> cover(const Point& blue) = 0;
};

/// The candidate-set algorithm above.
class CandidateStrategy final : public CoverStrategy {
 public:
  const char* name() const override { return "candidate"; }
  void reset(std::span<const Point> reds) override { state_ = OnlineState(reds); }
  std::vector<USquare> cover(const Point& blue) override {
    ProcessResult r = state_.process(blue);
    if (auto* p = std::get_if<Placed>(&r)) return std::move(p->squares);
    return {};
  }
  const OnlineState& state() const { return state_; }

 private:
  OnlineState state_;
};

/// Baseline: R(u) when it is red free, otherwise the first candidate square.
class CenteredStrategy final : public CoverStrategy {
 public:
  const char* name() const override { return "centered"; }
  void reset(std::span<const Point> reds) override {
    reds_.assign(reds.begin(), reds.end());
    placed_.clear();
  }
  std::vector<USquare> cover(const Point& blue) override {
    for (const USquare& s : placed_)
      if (contains_open(s, blue)) return {};
    std::optional<USquare> pick;
    const USquare ru(blue);
    if (is_red_free(ru, reds_)) {
      pick = ru;
    } else {
      const CandidateSet cs = candidate_set(blue, reds_);
      for (const auto& s : cs.slots)
        if (s) {
          pick = s;
          break;
        }
    }
    if (!pick) return {};
    placed_.push_back(*pick);
    return {*pick};
  }

 private:
  std::vector<Point> reds_;
  std::vector<USquare> placed_;
};

inline std::unique_ptr<CoverStrategy> make_strategy(std::string_view name) {
  if (name == "candidate") return std::make_unique<CandidateStrategy>();
  if (name == "centered") return std::make_unique<CenteredStrategy>();
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

}  // namespace classcover
