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

#pragma once

#include <span>
#include <vector>

#include "noncross/geom.hpp"

namespace noncross {

enum class Convexity { Convex, Reflex, Straight };

// Classification of a vertex within its own ring, the ring treated as a
// standalone counterclockwise polygon. principal means the bridging segment
// between the two ring neighbours meets the ring only at its endpoints; an
// ear's bridge runs inside the ring polygon, a mouth's outside. By convention
// every vertex of a 3-vertex ring counts as an ear: the triangle it spans is
// the whole ring polygon, so clipping logic stays uniform.
struct VertexClassification {
  int index = 0;
  Convexity convexity = Convexity::Convex;
  bool principal = false;
  bool ear = false;
  bool mouth = false;
};

// Unordered vertex pair with u < v, global indices.
struct Diagonal {
  int u = 0;
  int v = 0;

  friend bool operator==(const Diagonal&, const Diagonal&) = default;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

// A polygonal region: one outer ring (counterclockwise) minus the open
// interiors of disjoint hole rings (clockwise). Instances are immutable and
// only constructed through validate(), so every query may assume the full
// invariant set. Global vertex indices run over the outer ring first, then
// each hole in order.
class Region {
 public:
  // Checks ring sizes, coordinate bounds, vertex distinctness, per-ring
  // simplicity, hole containment and hole disjointness; normalizes
  // orientations (outer CCW, holes CW) without changing each ring's first
  // vertex. rings[0] is the outer ring.
  static Region validate(std::vector<std::vector<Point>> rings);

  int vertex_count() const { return n_; }
  int hole_count() const { return static_cast<int>(rings_.size()) - 1; }
  int ring_count() const { return static_cast<int>(rings_.size()); }
  const std::vector<std::vector<Point>>& rings() const { return rings_; }
  std::span<const Point> ring(int r) const;

  Point point(int v) const;
  int ring_of(int v) const;
  int ring_start(int r) const;
  int ring_size(int r) const;
  int local_index(int v) const;
  int next_in_ring(int v) const;
  int prev_in_ring(int v) const;

  // True iff u and v are joined by a boundary edge. Vertices on different
  // rings are never adjacent.
  bool adjacent(int u, int v) const;

  // True iff {u,v} is a diagonal: distinct, non-adjacent, and the open
  // segment lies in the open interior of the region.
  bool is_diagonal(int u, int v) const;

  // All diagonals, lexicographic by (u, v).
  std::vector<Diagonal> diagonals() const;

  VertexClassification classify_vertex(int v) const;

  // Ear vertices of the outer ring, ascending. (For a polygon, h = 0, these
  // are the ears of the polygon.)
  std::vector<int> ears() const;

  // Ring-local ear vertices of ring r as global indices, ascending.
  std::vector<int> ears_of_ring(int r) const;

  // Mouths of the region: mouths of the outer ring plus, for each hole ring,
  // its standalone ears. Each such vertex opens a notch into the region's
  // interior. Ascending order.
  std::vector<int> mouths() const;

  // Smallest region mouth; throws NoMouth when the region is a convex
  // polygon.
  int select_mouth() const;

  // True iff h = 0 and no vertex is Reflex. Straight vertices are tolerated.
  bool convex() const;

  // Net doubled area: outer ring minus holes (holes are clockwise, so the
  // plain shoelace sum over all rings).
  Wide doubled_area() const;

  PointLocation locate(const Point& p, Coord scale = 1) const;

 private:
  Region() = default;
  void check_index(int v) const;

  std::vector<std::vector<Point>> rings_;
  std::vector<int> ring_start_;
  int n_ = 0;
};

}  // namespace noncross
