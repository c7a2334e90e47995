// Copyright 2026 The Noncross Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "noncross/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "noncross/complex.hpp"

namespace noncross {

namespace {

// Fixed-precision decimal so output never depends on locale or printf state.
std::string num(double value) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << value;
  std::string text = out.str();
  if (text == "-0.00") text = "0.00";
  return text;
}

struct Mapper {
  double scale = 1.0;
  double ox = 0.0;
  double oy = 0.0;
  double height = 0.0;
  double x(Coord v) const { return (static_cast<double>(v) - ox) * scale + 20.0; }
  // SVG y grows downward.
  double y(Coord v) const {
    return height - ((static_cast<double>(v) - oy) * scale + 20.0);
  }
};

}  // namespace

std::string render_svg(const Region& region, const SvgOptions& options) {
  Coord min_x = region.point(0).x, max_x = min_x;
  Coord min_y = region.point(0).y, max_y = min_y;
  for (int v = 0; v < region.vertex_count(); ++v) {
    const Point p = region.point(v);
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double span_x = std::max<double>(1.0, static_cast<double>(max_x - min_x));
  const double span_y = std::max<double>(1.0, static_cast<double>(max_y - min_y));
  const double target = 360.0;
  Mapper map;
  map.scale = std::min(target / span_x, target / span_y);
  map.ox = static_cast<double>(min_x);
  map.oy = static_cast<double>(min_y);

  const double figure_w = span_x * map.scale + 40.0;
  const double figure_h = span_y * map.scale + 40.0;
  map.height = figure_h;

  const std::vector<Diagonal> diagonals = region.diagonals();
  const bool draw_skeleton = options.show_diagonals &&
                             static_cast<int>(diagonals.size()) <=
                                 options.skeleton_limit &&
                             !diagonals.empty();
  const double inset_w = draw_skeleton ? 240.0 : 0.0;
  const double width = figure_w + inset_w;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << num(width) << "\" height=\"" << num(figure_h) << "\" viewBox=\"0 0 "
      << num(width) << " " << num(figure_h) << "\">\n"
      << "<rect width=\"" << num(width) << "\" height=\"" << num(figure_h)
      << "\" fill=\"white\"/>\n";

  // Region fill: outer ring plus holes in one even-odd path.
  svg << "<path fill-rule=\"evenodd\" fill=\"#e8eef7\" stroke=\"#1b3a5c\" "
         "stroke-width=\"1.5\" d=\"";
  for (int r = 0; r < region.ring_count(); ++r) {
    const auto ring = region.ring(r);
    for (std::size_t i = 0; i < ring.size(); ++i) {
      svg << (i == 0 ? "M " : "L ") << num(map.x(ring[i].x)) << " "
          << num(map.y(ring[i].y)) << " ";
    }
    svg << "Z ";
  }
  svg << "\"/>\n";

  if (options.show_diagonals) {
    for (const Diagonal& d : diagonals) {
      const Point a = region.point(d.u);
      const Point b = region.point(d.v);
      svg << "<line x1=\"" << num(map.x(a.x)) << "\" y1=\"" << num(map.y(a.y))
          << "\" x2=\"" << num(map.x(b.x)) << "\" y2=\"" << num(map.y(b.y))
          << "\" stroke=\"#b86a1f\" stroke-width=\"0.8\" "
             "stroke-dasharray=\"4 3\"/>\n";
    }
  }

  for (int v = 0; v < region.vertex_count(); ++v) {
    const Point p = region.point(v);
    svg << "<circle cx=\"" << num(map.x(p.x)) << "\" cy=\"" << num(map.y(p.y))
        << "\" r=\"2.5\" fill=\"#1b3a5c\"/>\n"
        << "<text x=\"" << num(map.x(p.x) + 5.0) << "\" y=\""
        << num(map.y(p.y) - 5.0)
        << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">"
        << v << "</text>\n";
  }

  if (draw_skeleton) {
    // Complex vertices on a circle, an edge per non-crossing pair.
    svg << "<g class=\"skeleton\">\n";
    const int d = static_cast<int>(diagonals.size());
    const double cx = figure_w + 120.0;
    const double cy = figure_h / 2.0;
    const double radius = std::min(95.0, figure_h / 2.0 - 25.0);
    std::vector<std::pair<double, double>> pos(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      const double angle = 2.0 * 3.14159265358979323846 * i / d - 1.5707963267948966;
      pos[static_cast<std::size_t>(i)] = {cx + radius * std::cos(angle),
                                          cy + radius * std::sin(angle)};
    }
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        if (crossing(region, diagonals[static_cast<std::size_t>(i)],
                     diagonals[static_cast<std::size_t>(j)])) {
          continue;
        }
        svg << "<line x1=\"" << num(pos[static_cast<std::size_t>(i)].first)
            << "\" y1=\"" << num(pos[static_cast<std::size_t>(i)].second)
            << "\" x2=\"" << num(pos[static_cast<std::size_t>(j)].first)
            << "\" y2=\"" << num(pos[static_cast<std::size_t>(j)].second)
            << "\" stroke=\"#7a9cc4\" stroke-width=\"0.8\"/>\n";
      }
    }
    for (int i = 0; i < d; ++i) {
      const auto [px, py] = pos[static_cast<std::size_t>(i)];
      const Diagonal& diag = diagonals[static_cast<std::size_t>(i)];
      svg << "<circle cx=\"" << num(px) << "\" cy=\"" << num(py)
          << "\" r=\"3\" fill=\"#b86a1f\"/>\n"
          << "<text x=\"" << num(px + 4.0) << "\" y=\"" << num(py - 4.0)
          << "\" font-family=\"sans-serif\" font-size=\"9\" fill=\"#555555\">"
          << diag.u << "," << diag.v << "</text>\n";
    }
    svg << "</g>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace noncross
