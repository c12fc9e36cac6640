// Feeds a short blue sequence to the online algorithm and compares the
// result with the offline optimum.

#include <cstdio>
#include <variant>

#include "classcover/classcover.hpp"

using namespace classcover;

int main() {
  Instance inst;
  inst.reds = {{rat(0), rat(0)}, {rat(3, 4), rat(1, 4)}, {rat(1, 4), rat(1)}};
  inst.blues = {{rat(2, 5), rat(2, 5)}, {rat(-1, 3), rat(1, 2)}, {rat(1, 2), rat(3, 5)},
                {rat(6, 5), rat(-1, 4)}, {rat(2, 5), rat(-1, 2)}};

  OnlineState st(inst.reds);
  for (const Point& b : inst.blues) {
    const ProcessResult r = st.process(b);
    std::printf("blue %-14s ", to_string(b).c_str());
    if (std::holds_alternative<AlreadyCovered>(r)) {
      std::printf("already covered\n");
    } else if (std::holds_alternative<Uncoverable>(r)) {
      std::printf("uncoverable\n");
    } else {
      std::printf("placed");
      for (const USquare& s : std::get<Placed>(r).squares) std::printf(" %s", to_string(s).c_str());
      std::printf("\n");
    }
  }

  const auto opt = optimal_cover(inst);
  std::printf("online squares: %zu\n", st.placed().size());
  if (opt) std::printf("optimum:        %zu\n", opt->size());
  return 0;
}
