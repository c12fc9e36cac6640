#pragma once

// SVG rendering of an instance with placed squares. Exact coordinates are
// converted once, at print time, with a fixed number of decimals so output
// is byte-stable.

#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "classcover/geometry.hpp"
#include "classcover/oracle.hpp"

namespace classcover {

struct SvgScene {
  const Instance* instance = nullptr;
  std::vector<USquare> algorithm;
  std::vector<USquare> oracle;  // drawn dashed
  double scale = 100.0;         // pixels per unit
  double margin = 0.25;         // in units
};

namespace detail {

inline std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace detail

inline std::string render_svg(const SvgScene& scene) {
  std::vector<Rat> xs, ys;
  if (scene.instance) {
    for (const Point& p : scene.instance->reds) { xs.push_back(p.x); ys.push_back(p.y); }
    for (const Point& p : scene.instance->blues) { xs.push_back(p.x); ys.push_back(p.y); }
  }
  for (const auto* list : {&scene.algorithm, &scene.oracle})
    for (const USquare& s : *list) {
      xs.push_back(s.left());
      xs.push_back(s.right());
      ys.push_back(s.bottom());
      ys.push_back(s.top());
    }
  Rat x0(0), x1(1), y0(0), y1(1);
  if (!xs.empty()) {
    x0 = *std::min_element(xs.begin(), xs.end());
    x1 = *std::max_element(xs.begin(), xs.end());
    y0 = *std::min_element(ys.begin(), ys.end());
    y1 = *std::max_element(ys.begin(), ys.end());
  }
  const double k = scene.scale, mg = scene.margin;
  const double ox = x0.get_d() - mg, oy = y1.get_d() + mg;
  const double w = Rat(x1 - x0).get_d() + 2 * mg;
  const double h = Rat(y1 - y0).get_d() + 2 * mg;
  auto px = [&](const Rat& x) { return detail::fixed6((x.get_d() - ox) * k); };
  auto py = [&](const Rat& y) { return detail::fixed6((oy - y.get_d()) * k); };
  using detail::fixed6;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed6(w * k) + "\" height=\"" +
         fixed6(h * k) + "\" viewBox=\"0 0 " + fixed6(w * k) + " " + fixed6(h * k) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  auto square = [&](const USquare& s, const char* style) {
    out += "<rect x=\"" + px(s.left()) + "\" y=\"" + py(s.top()) + "\" width=\"" + fixed6(k) +
           "\" height=\"" + fixed6(k) + "\" " + style + "/>\n";
  };
  for (const USquare& s : scene.algorithm)
    square(s, "fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.5\"");
  for (const USquare& s : scene.oracle)
    square(s, "fill=\"none\" stroke=\"#2a9d4b\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"");
  const double arm = 0.04 * k;
  if (scene.instance) {
    for (const Point& p : scene.instance->reds) {
      const double cx = (p.x.get_d() - ox) * k, cy = (oy - p.y.get_d()) * k;
      out += "<path d=\"M" + fixed6(cx - arm) + " " + fixed6(cy - arm) + " L" + fixed6(cx + arm) +
             " " + fixed6(cy + arm) + " M" + fixed6(cx - arm) + " " + fixed6(cy + arm) + " L" +
             fixed6(cx + arm) + " " + fixed6(cy - arm) +
             "\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
    }
    for (const Point& p : scene.instance->blues)
      out += "<circle cx=\"" + px(p.x) + "\" cy=\"" + py(p.y) + "\" r=\"" + fixed6(0.03 * k) +
             "\" fill=\"#1f3a93\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace classcover
