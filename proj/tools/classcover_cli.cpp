// Command-line driver: run, duel, oracle, gen, render, bench.
//
// Exit codes: 0 success, 2 forfeit or bound violation, 1 any other error.
// Reports go to stdout (or --out) as a table followed by JSON lines.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "classcover/classcover.hpp"

using namespace classcover;
using nlohmann::json;

namespace {

struct Config {
  std::string mode;
  std::uint64_t seed = 1;
  std::string in;
  std::string out;
  std::size_t m = 8;
  std::size_t n = 8;
  long box = 4;
  long denom = 8;
  std::string gen = "uniform";
  std::size_t oracle_cap = 15;
  std::string strategy = "candidate";
  std::size_t instances = 200;
  unsigned threads = 0;
  bool no_oracle = false;
  bool timing = false;
  std::string format = "both";
};

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string read_file(const std::string& path) {
  if (path.empty()) throw std::runtime_error("--in is required for this mode");
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Instance load_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

json point_json(const Point& p) { return json::array({to_string(p.x), to_string(p.y)}); }

json squares_json(const std::vector<USquare>& v) {
  json a = json::array();
  for (const USquare& s : v) a.push_back(point_json(s.center()));
  return a;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

bool within_bound(const RunReport& r) { return !r.ratio || ratio_within_bound(*r.ratio, r.m); }

json run_json(const RunReport& r, bool timing) {
  json j{{"type", "run"},
         {"id", r.id},
         {"seed", r.seed},
         {"m", r.m},
         {"n", r.n},
         {"placed", r.placed},
         {"uncoverable", r.uncoverable},
         {"opt", r.opt ? json(*r.opt) : json(nullptr)},
         {"ratio", r.ratio ? json(to_string(*r.ratio)) : json(nullptr)},
         {"within_bound", within_bound(r)},
         {"slots", r.slot_histogram},
         {"squares", squares_json(r.squares)}};
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

RunOptions run_options(const Config& c) {
  RunOptions o;
  o.strategy = c.strategy;
  o.run_oracle = !c.no_oracle;
  o.oracle_cap = c.oracle_cap;
  return o;
}

int cmd_run(const Config& c, std::ostream& os) {
  const Instance inst = load_instance(c.in);
  spdlog::info("run: {} reds, {} blues, strategy {}", inst.reds.size(), inst.blues.size(), c.strategy);
  const RunReport r = run_instance(inst, run_options(c), c.in, c.seed);
  if (!r.opt && !c.no_oracle)
    spdlog::warn("oracle skipped: instance above --oracle-cap {}", c.oracle_cap);
  if (c.format != "json") {
    os << "instance  " << r.id << "\n"
       << "reds      " << r.m << "\n"
       << "blues     " << r.n << "\n"
       << "placed    " << r.placed << "\n"
       << "rejected  " << r.uncoverable << "\n"
       << "opt       " << (r.opt ? std::to_string(*r.opt) : "-") << "\n"
       << "ratio     " << (r.ratio ? to_string(*r.ratio) : "-") << "\n"
       << "bound     " << ratio_bound_value(r.m) << "\n"
       << "slots     ";
    for (std::size_t k = 0; k < 5; ++k) os << r.slot_histogram[k] << (k < 4 ? " " : "\n");
    if (c.timing) os << "wall_ms   " << r.wall_ms << "\n";
  }
  if (c.format != "table") os << run_json(r, c.timing).dump() << "\n";
  return within_bound(r) ? kExitOk : kExitViolation;
}

int cmd_duel(const Config& c, std::ostream& os) {
  std::unique_ptr<CoverStrategy> opponent = make_strategy(c.strategy);
  DuelOptions opt;
  opt.oracle_max_m = c.no_oracle ? 0 : std::min<std::size_t>(c.oracle_cap, 16);
  DuelReport d;
  try {
    d = duel(c.m, *opponent, opt);
  } catch (const OpponentForfeit& e) {
    spdlog::error("{}", e.what());
    if (c.format != "table")
      os << json{{"type", "duel"}, {"m", c.m}, {"strategy", c.strategy}, {"forfeit", e.what()}}.dump()
         << "\n";
    return kExitViolation;
  }
  const std::size_t need = static_cast<std::size_t>(floor_log2(c.m)) + 1;
  if (c.format != "json") {
    os << "round  active  blue                        new  tracked\n";
    for (const RoundRecord& r : d.rounds)
      os << pad(std::to_string(r.round), 7) << pad(std::to_string(r.active_before), 8)
         << pad(to_string(r.blue), 28) << pad(std::to_string(r.new_squares.size()), 5)
         << to_string(r.tracked) << "\n";
    os << "forced " << d.forced << " (lower bound " << need << "), opt " << d.opt
       << (d.opt_from_oracle ? " by oracle" : " by witness") << ", invariants "
       << (d.invariants_held ? "held" : "BROKEN") << "\n";
  }
  if (c.format != "table") {
    for (const RoundRecord& r : d.rounds)
      os << json{{"type", "round"},
                 {"round", r.round},
                 {"active", r.active_before},
                 {"blue", point_json(r.blue)},
                 {"corner_cell", r.in_corner_cell},
                 {"new_squares", squares_json(r.new_squares)},
                 {"tracked", point_json(r.tracked.center())},
                 {"invariants",
                  {r.checks.shrink, r.checks.cover_free, r.checks.blue_in_cell, r.checks.witness}}}
                .dump()
         << "\n";
    os << json{{"type", "duel"},
               {"m", d.m},
               {"strategy", d.strategy},
               {"rounds", d.rounds_played},
               {"forced", d.forced},
               {"lower_bound", need},
               {"opt", d.opt},
               {"opt_source", d.opt_from_oracle ? "oracle" : "witness"},
               {"witness", point_json(d.witness.center())},
               {"invariants_held", d.invariants_held}}
              .dump()
       << "\n";
  }
  return d.invariants_held && d.forced >= need && d.opt == 1 ? kExitOk : kExitViolation;
}

int cmd_oracle(const Config& c, std::ostream& os) {
  const Instance inst = load_instance(c.in);
  if (inst.blues.size() > c.oracle_cap || inst.reds.size() > c.oracle_cap)
    throw std::runtime_error("instance exceeds --oracle-cap " + std::to_string(c.oracle_cap));
  const auto sol = optimal_cover(inst);
  if (c.format != "json") {
    if (!sol) {
      os << "opt       - (some blue is uncoverable)\n";
    } else {
      os << "opt       " << sol->size() << "\n";
      for (std::size_t i = 0; i < sol->squares.size(); ++i)
        os << "square " << i << "  " << to_string(sol->squares[i]) << "\n";
    }
  }
  if (c.format != "table") {
    json j{{"type", "oracle"}, {"m", inst.reds.size()}, {"n", inst.blues.size()}};
    if (sol) {
      j["opt"] = sol->size();
      j["squares"] = squares_json(sol->squares);
      j["assignment"] = sol->assignment;
    } else {
      j["opt"] = nullptr;
    }
    os << j.dump() << "\n";
  }
  return kExitOk;
}

int cmd_gen(const Config& c, std::ostream& os) {
  GenConfig g;
  g.kind = parse_gen_kind(c.gen);
  g.n = c.n;
  g.m = c.m;
  g.box = c.box;
  g.denom = c.denom;
  g.seed = c.seed;
  const Instance inst = generate(g);
  os << "# " << c.gen << " seed=" << c.seed << " m=" << c.m;
  if (g.kind != GenKind::adversarial) os << " n=" << c.n << " box=" << c.box << " denom=" << c.denom;
  os << "\n" << serialize_instance(inst);
  return kExitOk;
}

int cmd_render(const Config& c, std::ostream& os) {
  const Instance inst = load_instance(c.in);
  const RunReport r = run_instance(inst, run_options(c));
  SvgScene scene;
  scene.instance = &inst;
  scene.algorithm = r.squares;
  if (r.oracle_solution) scene.oracle = r.oracle_solution->squares;
  os << render_svg(scene);
  return kExitOk;
}

int cmd_bench(const Config& c, std::ostream& os) {
  BenchConfig b;
  b.seed = c.seed;
  b.instances = c.instances;
  b.max_n = c.n;
  b.ms.clear();
  for (std::size_t m = 1; m <= c.m; m *= 2) b.ms.push_back(m);
  b.box = c.box;
  b.denom = c.denom;
  b.threads = c.threads;
  b.run = run_options(c);
  const BenchReport rep = run_bench(b);
  if (c.format != "json") {
    os << "m     instances  max_ratio  bound    violations\n";
    for (const BenchRow& row : rep.rows) {
      char bound[32];
      std::snprintf(bound, sizeof bound, "%.3f", row.bound);
      os << pad(std::to_string(row.m), 6) << pad(std::to_string(row.instances), 11)
         << pad(row.max_ratio ? to_string(*row.max_ratio) : "-", 11) << pad(bound, 9)
         << row.violations << "\n";
    }
  }
  if (c.format != "table") {
    for (const RunReport& r : rep.runs) os << run_json(r, c.timing).dump() << "\n";
    json rows = json::array();
    for (const BenchRow& row : rep.rows)
      rows.push_back({{"m", row.m},
                      {"instances", row.instances},
                      {"max_ratio", row.max_ratio ? json(to_string(*row.max_ratio)) : json(nullptr)},
                      {"bound", row.bound},
                      {"violations", row.violations}});
    os << json{{"type", "bench"}, {"seed", c.seed}, {"rows", rows}, {"violations", rep.violations}}.dump()
       << "\n";
  }
  return rep.violations == 0 ? kExitOk : kExitViolation;
}

void setup_logging() {
  auto logger = spdlog::stderr_logger_mt("classcover");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* lvl = std::getenv("CLASSCOVER_LOG")) spdlog::set_level(spdlog::level::from_str(lvl));
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  Config c;
  CLI::App app{"Online covering of blue points by red-free unit squares"};
  app.add_option("--mode", c.mode, "run | duel | oracle | gen | render | bench")
      ->required()
      ->check(CLI::IsMember({"run", "duel", "oracle", "gen", "render", "bench"}));
  app.add_option("--seed", c.seed, "RNG seed");
  app.add_option("--in", c.in, "input instance file");
  app.add_option("--out", c.out, "output file (default stdout)");
  app.add_option("--m", c.m, "red count (gen, duel) or largest swept m (bench)");
  app.add_option("--n", c.n, "blue count (gen) or largest n (bench)");
  app.add_option("--box", c.box, "side of the sampling box")->check(CLI::PositiveNumber);
  app.add_option("--denom", c.denom, "coordinate denominator")->check(CLI::PositiveNumber);
  app.add_option("--gen", c.gen, "generator")->check(CLI::IsMember({"uniform", "clustered", "adversarial"}));
  app.add_option("--oracle-cap", c.oracle_cap, "largest n or m given to the exact oracle");
  app.add_option("--strategy", c.strategy, "online strategy")->check(CLI::IsMember({"candidate", "centered"}));
  app.add_option("--instances", c.instances, "bench instance count");
  app.add_option("--threads", c.threads, "bench worker threads (0: all cores)");
  app.add_flag("--no-oracle", c.no_oracle, "skip the exact oracle");
  app.add_flag("--timing", c.timing, "include wall time in reports");
  app.add_option("--format", c.format, "report format")->check(CLI::IsMember({"table", "json", "both"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    Output out(c.out);
    std::ostream& os = out.stream();
    if (c.mode == "run") return cmd_run(c, os);
    if (c.mode == "duel") return cmd_duel(c, os);
    if (c.mode == "oracle") return cmd_oracle(c, os);
    if (c.mode == "gen") return cmd_gen(c, os);
    if (c.mode == "render") return cmd_render(c, os);
    return cmd_bench(c, os);
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitError;
  }
}
