// SVG rendering of a plan: the grid, one colored polyline per UAV through
// its cell centers, a start marker per path, and a wind arrow along +x.
//
// Geometry is fixed (24 px cell pitch, y flipped so row 1 sits at the
// bottom) and colors come from a fixed 10-color palette, so output is
// byte-stable and diffable.
#pragma once

#include <string>
#include <vector>

#include "mucpp/grid.hpp"
#include "mucpp/plan.hpp"

namespace mucpp::svg {

namespace detail {
constexpr int kPitch = 24;
constexpr int kMargin = 36;

inline const char* palette(size_t uav_index) {
  static const char* kColors[10] = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return kColors[uav_index % 10];
}
}  // namespace detail

inline std::string render(const Plan& pl, const GridSpec& g) {
  using detail::kMargin;
  using detail::kPitch;
  const int w = g.n * kPitch + 2 * kMargin;
  const int h = g.m * kPitch + 2 * kMargin;
  auto px = [&](CellCoord c) { return kMargin + (2 * c.x - 1) * kPitch / 2; };
  auto py = [&](CellCoord c) {
    return kMargin + (2 * (g.m - c.y) + 1) * kPitch / 2;
  };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
       std::to_string(w) + "\" height=\"" + std::to_string(h) +
       "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) +
       "\">\n";
  s += "<rect width=\"" + std::to_string(w) + "\" height=\"" +
       std::to_string(h) + "\" fill=\"#ffffff\"/>\n";

  s += "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (int x = 0; x <= g.n; ++x) {
    int gx = kMargin + x * kPitch;
    s += "<line x1=\"" + std::to_string(gx) + "\" y1=\"" +
         std::to_string(kMargin) + "\" x2=\"" + std::to_string(gx) +
         "\" y2=\"" + std::to_string(kMargin + g.m * kPitch) + "\"/>\n";
  }
  for (int y = 0; y <= g.m; ++y) {
    int gy = kMargin + y * kPitch;
    s += "<line x1=\"" + std::to_string(kMargin) + "\" y1=\"" +
         std::to_string(gy) + "\" x2=\"" +
         std::to_string(kMargin + g.n * kPitch) + "\" y2=\"" +
         std::to_string(gy) + "\"/>\n";
  }
  s += "</g>\n";

  // wind arrow in the top margin, blowing +x
  {
    const int ay = kMargin / 2;
    const int ax0 = kMargin, ax1 = kMargin + 2 * kPitch;
    s += "<line x1=\"" + std::to_string(ax0) + "\" y1=\"" +
         std::to_string(ay) + "\" x2=\"" + std::to_string(ax1) + "\" y2=\"" +
         std::to_string(ay) + "\" stroke=\"#444444\" stroke-width=\"2\"/>\n";
    s += "<polygon points=\"" + std::to_string(ax1) + "," +
         std::to_string(ay - 4) + " " + std::to_string(ax1 + 8) + "," +
         std::to_string(ay) + " " + std::to_string(ax1) + "," +
         std::to_string(ay + 4) + "\" fill=\"#444444\"/>\n";
    s += "<text x=\"" + std::to_string(ax1 + 14) + "\" y=\"" +
         std::to_string(ay + 4) +
         "\" font-family=\"sans-serif\" font-size=\"12\" "
         "fill=\"#444444\">wind</text>\n";
  }

  for (size_t k = 0; k < pl.paths.size(); ++k) {
    const UavPath& p = pl.paths[k];
    if (p.cells.empty()) continue;
    const char* color = detail::palette(k);
    s += "<polyline fill=\"none\" stroke=\"";
    s += color;
    s += "\" stroke-width=\"2\" points=\"";
    for (size_t i = 0; i < p.cells.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(px(p.cells[i])) + "," + std::to_string(py(p.cells[i]));
    }
    s += "\"/>\n";
    s += "<circle cx=\"" + std::to_string(px(p.cells.front())) + "\" cy=\"" +
         std::to_string(py(p.cells.front())) + "\" r=\"5\" fill=\"";
    s += color;
    s += "\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace mucpp::svg
