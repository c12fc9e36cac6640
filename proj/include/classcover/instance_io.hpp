#pragma once

// Plain-text instance format:
//
//   # comment
//   reds:
//   0 0
//   1/2 -3/4
//   blues:
//   2/5 2/5
//
// Each section holds one "x y" pair per line. Blues keep arrival order.

#include <stdexcept>
#include <string>
#include <string_view>

#include "classcover/oracle.hpp"
#include "classcover/rational.hpp"

namespace classcover {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r";
  const std::size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const std::size_t e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline Instance parse_instance(std::string_view text) {
  Instance inst;
  enum class Section { none, reds, blues } section = Section::none;
  bool seen_reds = false, seen_blues = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++lineno;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line == "reds:" || line == "blues:") {
      const bool reds = line == "reds:";
      bool& seen = reds ? seen_reds : seen_blues;
      if (seen) throw ParseError(lineno, "duplicate '" + std::string(line) + "' section");
      seen = true;
      section = reds ? Section::reds : Section::blues;
      continue;
    }
    if (section == Section::none) throw ParseError(lineno, "point outside any section");
    const std::size_t gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos) throw ParseError(lineno, "expected two coordinates");
    const std::string_view xs = line.substr(0, gap);
    const std::string_view ys = detail::trim(line.substr(gap));
    if (ys.find_first_of(" \t") != std::string_view::npos)
      throw ParseError(lineno, "expected two coordinates");
    Point p;
    try {
      p = {parse_rat(xs), parse_rat(ys)};
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    (section == Section::reds ? inst.reds : inst.blues).push_back(std::move(p));
  }
  return inst;
}

/// Canonical text form; parse_instance(serialize_instance(i)) == i.
inline std::string serialize_instance(const Instance& inst) {
  std::string out = "reds:\n";
  for (const Point& p : inst.reds) out += to_string(p.x) + " " + to_string(p.y) + "\n";
  out += "blues:\n";
  for (const Point& p : inst.blues) out += to_string(p.x) + " " + to_string(p.y) + "\n";
  return out;
}

}  // namespace classcover
