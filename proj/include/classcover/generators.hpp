#pragma once

// Seeded instance generators. Coordinates are multiples of 1/denom inside
// [0, box]^2. Draws use mt19937_64 with plain modulo reduction so a seed
// gives the same instance on every platform.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>

#include "classcover/adversary.hpp"
#include "classcover/oracle.hpp"

namespace classcover {

enum class GenKind { uniform, clustered, adversarial };

inline GenKind parse_gen_kind(std::string_view s) {
  if (s == "uniform") return GenKind::uniform;
  if (s == "clustered") return GenKind::clustered;
  if (s == "adversarial") return GenKind::adversarial;
  throw std::invalid_argument("unknown generator '" + std::string(s) + "'");
}

struct GenConfig {
  GenKind kind = GenKind::uniform;
  std::size_t n = 8;  // blues
  std::size_t m = 8;  // reds
  long box = 4;       // side of the sampling box
  long denom = 8;     // coordinate resolution
  std::uint64_t seed = 1;
};

class RatSampler {
 public:
  explicit RatSampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [0, bound).
  std::uint64_t index(std::uint64_t bound) { return rng_() % bound; }

  /// k / denom with k uniform in [0, box * denom].
  Rat coord(long box, long denom) {
    const std::uint64_t k = index(static_cast<std::uint64_t>(box * denom) + 1);
    return rat(static_cast<long>(k), denom);
  }
  Point point(long box, long denom) {
    Rat x = coord(box, denom);
    Rat y = coord(box, denom);
    return {x, y};
  }
  /// Point strictly inside the unit square s, on the 1/denom lattice
  /// refined by 2 so the interior is never empty.
  Point inside(const USquare& s, long denom) {
    const long d = 2 * denom;
    auto off = [&]() { return rat(static_cast<long>(index(static_cast<std::uint64_t>(d - 1))) + 1, d); };
    Rat dx = off();
    Rat dy = off();
    return {Rat(s.left() + dx), Rat(s.bottom() + dy)};
  }

 private:
  std::mt19937_64 rng_;
};

inline Instance generate(const GenConfig& cfg) {
  if (cfg.box <= 0 || cfg.denom <= 0) throw std::invalid_argument("generate: box and denom must be positive");
  RatSampler rs(cfg.seed);
  Instance inst;
  switch (cfg.kind) {
    case GenKind::uniform: {
      for (std::size_t i = 0; i < cfg.m; ++i) inst.reds.push_back(rs.point(cfg.box, cfg.denom));
      for (std::size_t i = 0; i < cfg.n; ++i) inst.blues.push_back(rs.point(cfg.box, cfg.denom));
      break;
    }
    case GenKind::clustered: {
      for (std::size_t i = 0; i < cfg.m; ++i) inst.reds.push_back(rs.point(cfg.box, cfg.denom));
      // Blues come in groups of up to four inside a sampled red-free square.
      while (inst.blues.size() < cfg.n) {
        std::optional<USquare> home;
        for (int attempt = 0; attempt < 64 && !home; ++attempt) {
          const USquare s(rs.point(cfg.box, cfg.denom));
          if (is_red_free(s, inst.reds)) home = s;
        }
        if (!home) {
          inst.blues.push_back(rs.point(cfg.box, cfg.denom));
          continue;
        }
        const std::size_t group = 1 + rs.index(4);
        for (std::size_t j = 0; j < group && inst.blues.size() < cfg.n; ++j)
          inst.blues.push_back(rs.inside(*home, cfg.denom));
      }
      break;
    }
    case GenKind::adversarial: {
      CandidateStrategy opponent;
      DuelOptions opts;
      opts.oracle_max_m = 0;
      inst = duel(std::max<std::size_t>(cfg.m, 3), opponent, opts).transcript;
      break;
    }
  }
  return inst;
}

}  // namespace classcover
