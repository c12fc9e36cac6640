#pragma once

// Experiment plumbing shared by the CLI, the demos and the acceptance suite:
// single-instance runs, competitive-ratio bounds and the benchmark sweep.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <exception>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>

#include "classcover/generators.hpp"
#include "classcover/online.hpp"
#include "classcover/oracle.hpp"

namespace classcover {

struct RunReport {
  std::string id;
  std::uint64_t seed = 0;
  std::size_t m = 0;  // distinct reds
  std::size_t n = 0;  // blues
  std::size_t placed = 0;
  std::size_t uncoverable = 0;
  std::optional<std::size_t> opt;
  std::optional<Rat> ratio;  // present iff opt ran and opt >= 1
  std::array<std::size_t, 5> slot_histogram{};
  double wall_ms = 0;
  std::vector<USquare> squares;
  std::optional<CoverSolution> oracle_solution;
};

struct RunOptions {
  std::string strategy = "candidate";
  bool run_oracle = true;
  std::size_t oracle_cap = 15;  // skip the oracle above this many blues or reds
  OracleLimits limits{};
};

/// Runs the online strategy over the blues in order, then the oracle when the
/// instance is within the cap.
inline RunReport run_instance(const Instance& inst, const RunOptions& opt = {},
                              std::string id = "", std::uint64_t seed = 0) {
  RunReport rep;
  rep.id = std::move(id);
  rep.seed = seed;
  const auto t0 = std::chrono::steady_clock::now();
  OnlineState reference(inst.reds);
  rep.m = reference.reds().size();
  rep.n = inst.blues.size();
  if (opt.strategy == "candidate") {
    for (const Point& b : inst.blues) reference.process(b);
    rep.squares = reference.squares();
    rep.slot_histogram = reference.slot_histogram();
    rep.uncoverable = reference.rejected().size();
  } else {
    std::unique_ptr<CoverStrategy> s = make_strategy(opt.strategy);
    s->reset(inst.reds);
    for (const Point& b : inst.blues) {
      std::vector<USquare> fresh = s->cover(b);
      if (fresh.empty() && std::none_of(rep.squares.begin(), rep.squares.end(),
                                        [&](const USquare& q) { return contains_open(q, b); }))
        ++rep.uncoverable;
      rep.squares.insert(rep.squares.end(), fresh.begin(), fresh.end());
    }
  }
  rep.placed = rep.squares.size();
  if (opt.run_oracle && inst.blues.size() <= opt.oracle_cap && inst.reds.size() <= opt.oracle_cap) {
    // Uncoverable blues are dropped so the optimum is over what can be covered.
    Instance coverable{inst.reds, {}};
    for (const Point& b : inst.blues)
      if (is_coverable(b, inst.reds)) coverable.blues.push_back(b);
    rep.oracle_solution = optimal_cover(coverable, opt.limits);
    if (rep.oracle_solution) {
      rep.opt = rep.oracle_solution->size();
      if (*rep.opt >= 1) rep.ratio = rat(static_cast<long>(rep.placed), static_cast<long>(*rep.opt));
    }
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// Exact test of ratio <= bound(m): 4 for m = 0, 6 for m = 1 and
/// 10 + 10 log2 m for m >= 2. For ratio p/q the last one is
/// 2^(p - 10q) <= m^(10q) whenever p > 10q.
inline bool ratio_within_bound(const Rat& ratio, std::size_t m) {
  if (m == 0) return ratio <= 4;
  if (m == 1) return ratio <= 6;
  const mpz_class p = ratio.get_num();
  const mpz_class q = ratio.get_den();
  if (p <= 10 * q) return true;
  const mpz_class e = p - 10 * q;
  const mpz_class f = 10 * q;
  if (!e.fits_ulong_p() || !f.fits_ulong_p()) return false;
  mpz_class lhs, rhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), 2, e.get_ui());
  mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(m), f.get_ui());
  return lhs <= rhs;
}

/// Printable bound value (rounded) for reports.
inline double ratio_bound_value(std::size_t m) {
  if (m == 0) return 4;
  if (m == 1) return 6;
  return 10 + 10 * std::log2(static_cast<double>(m));
}

struct BenchConfig {
  std::uint64_t seed = 7;
  std::size_t instances = 200;  // total, spread over the m values
  std::size_t max_n = 8;
  std::vector<std::size_t> ms = {1, 2, 4, 8};
  long box = 4;
  long denom = 8;
  unsigned threads = 0;  // 0: hardware concurrency
  RunOptions run{};
};

struct BenchRow {
  std::size_t m = 0;
  std::size_t instances = 0;
  std::optional<Rat> max_ratio;
  double bound = 0;
  std::size_t violations = 0;
};

struct BenchReport {
  std::vector<RunReport> runs;  // sorted by id
  std::vector<BenchRow> rows;   // one per swept m
  std::size_t violations = 0;
};

/// Per-instance seed, independent of scheduling.
inline std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline BenchReport run_bench(const BenchConfig& cfg) {
  if (cfg.ms.empty()) throw std::invalid_argument("run_bench: no m values");
  const std::size_t total = cfg.instances;
  std::vector<RunReport> runs(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&]() {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        const std::uint64_t s = instance_seed(cfg.seed, i);
        GenConfig g;
        g.kind = GenKind::uniform;
        g.m = cfg.ms[i % cfg.ms.size()];
        g.n = 1 + static_cast<std::size_t>(s % cfg.max_n);
        g.box = cfg.box;
        g.denom = cfg.denom;
        g.seed = s;
        char id[32];
        std::snprintf(id, sizeof id, "bench-%06zu", i);
        runs[i] = run_instance(generate(g), cfg.run, id, s);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned nt = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  nt = static_cast<unsigned>(std::min<std::size_t>(nt, std::max<std::size_t>(total, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  BenchReport rep;
  for (std::size_t m : cfg.ms) {
    BenchRow row;
    row.m = m;
    row.bound = ratio_bound_value(m);
    rep.rows.push_back(row);
  }
  for (std::size_t i = 0; i < total; ++i) {
    BenchRow& row = rep.rows[i % cfg.ms.size()];
    ++row.instances;
    const RunReport& r = runs[i];
    if (!r.ratio) continue;
    if (!row.max_ratio || *row.max_ratio < *r.ratio) row.max_ratio = *r.ratio;
    if (!ratio_within_bound(*r.ratio, r.m)) {
      ++row.violations;
      ++rep.violations;
    }
  }
  rep.runs = std::move(runs);
  return rep;
}

}  // namespace classcover
