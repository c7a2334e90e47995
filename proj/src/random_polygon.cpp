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

#include "noncross/random_polygon.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "noncross/error.hpp"

namespace noncross {

namespace {

Wide squared_length(const Point& a, const Point& b) {
  const Wide dx = static_cast<Wide>(a.x) - b.x;
  const Wide dy = static_cast<Wide>(a.y) - b.y;
  return dx * dx + dy * dy;
}

// One 2-opt repair pass; true when the tour ended crossing-free. Reversals
// must strictly shorten the tour, so the caller's pass budget suffices.
bool uncross(std::vector<Point>& pts, int max_swaps) {
  const int n = static_cast<int>(pts.size());
  for (int swaps = 0; swaps <= max_swaps;) {
    bool crossing_found = false;
    bool improved = false;
    for (int i = 0; i < n && !improved; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int i2 = (i + 1) % n;
        const int j2 = (j + 1) % n;
        if (i == j || i2 == j || j2 == i) continue;  // adjacent edges
        const Segment a{pts[static_cast<std::size_t>(i)],
                        pts[static_cast<std::size_t>(i2)]};
        const Segment b{pts[static_cast<std::size_t>(j)],
                        pts[static_cast<std::size_t>(j2)]};
        if (segments_intersect(a, b) == SegRelation::Disjoint) continue;
        crossing_found = true;
        const int cmp = compare_sqrt_sums(
            squared_length(a.a, b.a), squared_length(a.b, b.b),
            squared_length(a.a, a.b), squared_length(b.a, b.b));
        if (cmp >= 0) continue;  // degenerate contact; not improvable here
        std::reverse(pts.begin() + i + 1, pts.begin() + j + 1);
        ++swaps;
        improved = true;
        break;
      }
    }
    if (!crossing_found) return true;
    if (!improved) return false;  // only degenerate contacts remain
  }
  return false;
}

}  // namespace

Region random_simple_polygon(const RandomPolygonOptions& options) {
  if (options.n < 3 || options.grid < 2 ||
      static_cast<long long>(options.grid) * options.grid < options.n) {
    throw Error(Errc::InvariantViolation,
                "generator needs n >= 3, grid >= 2, grid^2 >= n");
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<Coord> coord(0, options.grid - 1);

  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::set<std::pair<Coord, Coord>> seen;
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < options.n) {
      const Coord x = coord(rng);
      const Coord y = coord(rng);
      if (seen.insert({x, y}).second) pts.push_back({x, y});
    }
    std::shuffle(pts.begin(), pts.end(), rng);

    if (!uncross(pts, 16 * options.n * options.n)) continue;
    try {
      Region region = Region::validate({pts});
      bool straight = false;
      bool reflex = false;
      for (int v = 0; v < region.vertex_count(); ++v) {
        const Convexity c = region.classify_vertex(v).convexity;
        straight |= c == Convexity::Straight;
        reflex |= c == Convexity::Reflex;
      }
      if (straight) continue;  // neither strictly convex nor mouthed
      if (options.require_nonconvex && !reflex) continue;
      return region;
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(Errc::InvariantViolation,
              "no simple polygon found for seed " +
                  std::to_string(options.seed) + " after " +
                  std::to_string(options.max_attempts) + " attempts");
}

}  // namespace noncross
