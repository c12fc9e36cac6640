#pragma once

// Exact rational scalars. Every coordinate in the library is a Rat; nothing
// is ever rounded inside a predicate.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace classcover {

using Rat = mpq_class;

/// Builds num/den in lowest terms. Throws on den == 0.
inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline const Rat& half() {
  static const Rat kHalf = rat(1, 2);
  return kHalf;
}

inline Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Rat min_rat(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline Rat max_rat(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rat& r) { return r.get_str(10); }

/// Parses "p/q", "-p/q" or an integer. Rejects zero denominators, signs on
/// the denominator, whitespace and anything else that is not a plain literal.
inline Rat parse_rat(std::string_view text) {
  auto bad = [&](const char* why) {
    return std::invalid_argument(std::string("malformed rational '") +
                                 std::string(text) + "': " + why);
  };
  if (text.empty()) throw bad("empty");
  std::size_t pos = 0;
  if (text[0] == '-') pos = 1;
  const std::size_t slash = text.find('/');
  const std::string_view num =
      text.substr(pos, slash == std::string_view::npos ? text.npos : slash - pos);
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!all_digits(num)) throw bad("numerator is not a digit string");
  std::string den = "1";
  if (slash != std::string_view::npos) {
    const std::string_view d = text.substr(slash + 1);
    if (!all_digits(d)) throw bad("denominator is not a digit string");
    den = std::string(d);
  }
  mpz_class n(std::string(num), 10);
  mpz_class q(den, 10);
  if (q == 0) throw bad("zero denominator");
  if (pos == 1) n = -n;
  Rat r(n, q);
  r.canonicalize();
  return r;
}

}  // namespace classcover
