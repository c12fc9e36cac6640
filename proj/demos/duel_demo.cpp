// Plays the adaptive adversary against the online algorithm and the
// centered strategy and prints each round.

#include <cstdio>
#include <cstdlib>

#include "classcover/classcover.hpp"

using namespace classcover;

namespace {

void play(std::size_t m, CoverStrategy& s) {
  const DuelReport d = duel(m, s);
  std::printf("%s vs adversary, m = %zu\n", s.name(), m);
  for (const RoundRecord& r : d.rounds)
    std::printf("  round %d: %4zu active reds, blue %s, %zu new square(s)\n", r.round, r.active_before,
                to_string(r.blue).c_str(), r.new_squares.size());
  std::printf("  forced %zu squares, optimum %zu, invariants %s\n\n", d.forced, d.opt,
              d.invariants_held ? "held" : "broken");
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t m = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 9;
  CandidateStrategy candidate;
  CenteredStrategy centered;
  play(m, candidate);
  play(m, centered);
  return 0;
}
