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

#include "noncross/region.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "noncross/error.hpp"

namespace noncross {

namespace {

std::string point_str(const Point& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string edge_pair_str(int ring, int i, int j) {
  return "ring " + std::to_string(ring) + " edges " + std::to_string(i) +
         " and " + std::to_string(j);
}

Segment ring_edge(const std::vector<Point>& ring, std::size_t i) {
  return {ring[i], ring[(i + 1) % ring.size()]};
}

// Reverses a ring while keeping its first vertex first.
void reverse_keep_first(std::vector<Point>& ring) {
  std::reverse(ring.begin() + 1, ring.end());
}

void check_ring_simple(const std::vector<Point>& ring, int ring_index) {
  const std::size_t m = ring.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool neighbours = j == i + 1 || (i == 0 && j == m - 1);
      const SegRelation rel =
          segments_intersect(ring_edge(ring, i), ring_edge(ring, j));
      if (neighbours ? rel != SegRelation::SharedEndpointOnly
                     : rel != SegRelation::Disjoint) {
        throw Error(Errc::NotSimple,
                    edge_pair_str(ring_index, static_cast<int>(i),
                                  static_cast<int>(j)) +
                        " intersect");
      }
    }
  }
}

}  // namespace

Region Region::validate(std::vector<std::vector<Point>> rings) {
  if (rings.empty()) {
    throw Error(Errc::TooFewVertices, "region has no rings");
  }
  for (std::size_t r = 0; r < rings.size(); ++r) {
    if (rings[r].size() < 3) {
      throw Error(Errc::TooFewVertices,
                  "ring " + std::to_string(r) + " has " +
                      std::to_string(rings[r].size()) + " vertices");
    }
    for (const Point& p : rings[r]) {
      if (p.x <= -kCoordLimit || p.x >= kCoordLimit || p.y <= -kCoordLimit ||
          p.y >= kCoordLimit) {
        throw Error(Errc::CoordinateOverflow,
                    "coordinate " + point_str(p) + " out of range");
      }
    }
  }

  {
    std::vector<Point> all;
    for (const auto& ring : rings) all.insert(all.end(), ring.begin(), ring.end());
    std::sort(all.begin(), all.end(), [](const Point& a, const Point& b) {
      return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    const auto dup = std::adjacent_find(all.begin(), all.end());
    if (dup != all.end()) {
      throw Error(Errc::DuplicateVertex, "vertex " + point_str(*dup) +
                                             " appears more than once");
    }
  }

  for (std::size_t r = 0; r < rings.size(); ++r) {
    check_ring_simple(rings[r], static_cast<int>(r));
  }

  // Normalize orientation: outer CCW, holes CW.
  for (std::size_t r = 0; r < rings.size(); ++r) {
    const Wide area = ring_doubled_area(rings[r]);
    const bool want_ccw = r == 0;
    if ((area > 0) != want_ccw) reverse_keep_first(rings[r]);
  }

  // Rings must be pairwise edge-disjoint; shared vertices were already
  // excluded by the distinctness check, and a vertex of one ring interior to
  // an edge of another shows up as a Touching edge pair here.
  for (std::size_t r = 0; r < rings.size(); ++r) {
    for (std::size_t s = r + 1; s < rings.size(); ++s) {
      for (std::size_t i = 0; i < rings[r].size(); ++i) {
        for (std::size_t j = 0; j < rings[s].size(); ++j) {
          if (segments_intersect(ring_edge(rings[r], i),
                                 ring_edge(rings[s], j)) !=
              SegRelation::Disjoint) {
            const Errc code =
                r == 0 ? Errc::HoleNotInterior : Errc::HolesIntersect;
            throw Error(code, "ring " + std::to_string(r) + " edge " +
                                  std::to_string(i) + " meets ring " +
                                  std::to_string(s) + " edge " +
                                  std::to_string(j));
          }
        }
      }
    }
  }

  // With edge-disjointness established, one witness vertex decides the side
  // of a whole ring.
  for (std::size_t s = 1; s < rings.size(); ++s) {
    if (point_in_ring(rings[s][0], rings[0]) != PointLocation::Interior) {
      throw Error(Errc::HoleNotInterior,
                  "hole " + std::to_string(s) + " is not inside the outer ring");
    }
  }
  for (std::size_t r = 1; r < rings.size(); ++r) {
    for (std::size_t s = 1; s < rings.size(); ++s) {
      if (r == s) continue;
      if (point_in_ring(rings[s][0], rings[r]) == PointLocation::Interior) {
        throw Error(Errc::HolesIntersect, "hole " + std::to_string(s) +
                                              " lies inside hole " +
                                              std::to_string(r));
      }
    }
  }

  Region out;
  out.rings_ = std::move(rings);
  out.ring_start_.reserve(out.rings_.size() + 1);
  int start = 0;
  for (const auto& ring : out.rings_) {
    out.ring_start_.push_back(start);
    start += static_cast<int>(ring.size());
  }
  out.ring_start_.push_back(start);
  out.n_ = start;
  return out;
}

std::span<const Point> Region::ring(int r) const {
  if (r < 0 || r >= ring_count()) {
    throw Error(Errc::IndexOutOfRange, "ring " + std::to_string(r));
  }
  return rings_[static_cast<std::size_t>(r)];
}

void Region::check_index(int v) const {
  if (v < 0 || v >= n_) {
    throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v));
  }
}

Point Region::point(int v) const {
  check_index(v);
  const int r = ring_of(v);
  return rings_[static_cast<std::size_t>(r)]
               [static_cast<std::size_t>(v - ring_start_[r])];
}

int Region::ring_of(int v) const {
  check_index(v);
  int r = 0;
  while (ring_start_[r + 1] <= v) ++r;
  return r;
}

int Region::ring_start(int r) const { return ring_start_[r]; }

int Region::ring_size(int r) const {
  return static_cast<int>(rings_[static_cast<std::size_t>(r)].size());
}

int Region::local_index(int v) const { return v - ring_start_[ring_of(v)]; }

int Region::next_in_ring(int v) const {
  const int r = ring_of(v);
  const int m = ring_size(r);
  return ring_start_[r] + (v - ring_start_[r] + 1) % m;
}

int Region::prev_in_ring(int v) const {
  const int r = ring_of(v);
  const int m = ring_size(r);
  return ring_start_[r] + (v - ring_start_[r] + m - 1) % m;
}

bool Region::adjacent(int u, int v) const {
  check_index(u);
  check_index(v);
  if (u == v || ring_of(u) != ring_of(v)) return false;
  return next_in_ring(u) == v || prev_in_ring(u) == v;
}

bool Region::is_diagonal(int u, int v) const {
  check_index(u);
  check_index(v);
  if (u == v || adjacent(u, v)) return false;
  return segment_interior_in_region_interior({point(u), point(v)}, rings_);
}

std::vector<Diagonal> Region::diagonals() const {
  std::vector<Diagonal> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (is_diagonal(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

VertexClassification Region::classify_vertex(int v) const {
  check_index(v);
  const int r = ring_of(v);
  const auto& stored = rings_[static_cast<std::size_t>(r)];
  const int m = static_cast<int>(stored.size());
  const int local = v - ring_start_[r];

  // Standalone counterclockwise view of the ring; holes are stored clockwise
  // and get reversed (first vertex kept) for classification.
  std::vector<Point> view = stored;
  int pos = local;
  if (r != 0) {
    reverse_keep_first(view);
    pos = local == 0 ? 0 : m - local;
  }

  const Point& prev = view[static_cast<std::size_t>((pos + m - 1) % m)];
  const Point& cur = view[static_cast<std::size_t>(pos)];
  const Point& next = view[static_cast<std::size_t>((pos + 1) % m)];

  VertexClassification out;
  out.index = v;
  switch (orientation(prev, cur, next)) {
    case Orientation::Left: out.convexity = Convexity::Convex; break;
    case Orientation::Right: out.convexity = Convexity::Reflex; break;
    case Orientation::Collinear: out.convexity = Convexity::Straight; break;
  }

  if (m == 3) {
    // Triangle ring: the bridging segment is the opposite edge, so the strict
    // rule below would reject every vertex. Each vertex spans the whole
    // triangle, which is the ring polygon's interior; count it as an ear.
    out.principal = true;
    out.ear = true;
    return out;
  }

  const Segment bridge{prev, next};
  bool principal = true;
  for (int i = 0; i < m && principal; ++i) {
    const Segment e{view[static_cast<std::size_t>(i)],
                    view[static_cast<std::size_t>((i + 1) % m)]};
    switch (segments_intersect(bridge, e)) {
      case SegRelation::ProperCrossing:
      case SegRelation::Overlapping:
        principal = false;
        break;
      case SegRelation::Touching:
        // Contact at a bridge endpoint is allowed; an edge endpoint inside
        // the open bridge is not.
        if (strictly_inside_segment(e.a, bridge) ||
            strictly_inside_segment(e.b, bridge)) {
          principal = false;
        }
        break;
      case SegRelation::Disjoint:
      case SegRelation::SharedEndpointOnly:
        break;
    }
  }
  for (int u = 0; u < m && principal; ++u) {
    if (strictly_inside_segment(view[static_cast<std::size_t>(u)], bridge)) {
      principal = false;  // covers a Straight vertex shadowing its own bridge
    }
  }
  out.principal = principal;
  if (!principal) return out;

  const Point mid{prev.x + next.x, prev.y + next.y};
  switch (point_in_ring(mid, view, 2)) {
    case PointLocation::Interior: out.ear = true; break;
    case PointLocation::Exterior: out.mouth = true; break;
    case PointLocation::Boundary:
      throw Error(Errc::InvariantViolation,
                  "principal bridge midpoint on ring boundary at vertex " +
                      std::to_string(v));
  }
  return out;
}

std::vector<int> Region::ears_of_ring(int r) const {
  if (r < 0 || r >= ring_count()) {
    throw Error(Errc::IndexOutOfRange, "ring " + std::to_string(r));
  }
  std::vector<int> out;
  for (int v = ring_start_[r]; v < ring_start_[r + 1]; ++v) {
    if (classify_vertex(v).ear) out.push_back(v);
  }
  return out;
}

std::vector<int> Region::ears() const { return ears_of_ring(0); }

std::vector<int> Region::mouths() const {
  std::vector<int> out;
  for (int v = 0; v < ring_start_[1]; ++v) {
    if (classify_vertex(v).mouth) out.push_back(v);
  }
  for (int r = 1; r < ring_count(); ++r) {
    const auto hole_ears = ears_of_ring(r);
    out.insert(out.end(), hole_ears.begin(), hole_ears.end());
  }
  return out;
}

int Region::select_mouth() const {
  const auto all = mouths();
  if (all.empty()) {
    throw Error(Errc::NoMouth, "region is a convex polygon");
  }
  return all.front();
}

bool Region::convex() const {
  if (hole_count() > 0) return false;
  for (int v = 0; v < n_; ++v) {
    if (classify_vertex(v).convexity == Convexity::Reflex) return false;
  }
  return true;
}

Wide Region::doubled_area() const {
  Wide total = 0;
  for (const auto& ring : rings_) total += ring_doubled_area(ring);
  return total;
}

PointLocation Region::locate(const Point& p, Coord scale) const {
  return point_in_rings(p, rings_, scale);
}

}  // namespace noncross
