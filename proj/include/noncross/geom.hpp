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

#include <cstdint>
#include <span>
#include <vector>

namespace noncross {

// Integer coordinates, |x| and |y| strictly below 2^30. With that bound every
// predicate below evaluates exactly in signed 128-bit intermediates.
using Coord = std::int64_t;
using Wide = __int128;

constexpr Coord kCoordLimit = Coord{1} << 30;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Segment {
  Point a;
  Point b;
};

enum class Orientation { Left, Right, Collinear };

enum class SegRelation {
  Disjoint,           // closed segments share no point
  SharedEndpointOnly, // exactly one common point, an endpoint of both
  ProperCrossing,     // interiors cross at a single point
  Touching,           // endpoint of one lies on the other, not SharedEndpointOnly
  Overlapping,        // collinear with a shared subsegment of positive length
};

enum class PointLocation { Interior, Boundary, Exterior };

// Twice the signed area of triangle (p, q, r). Positive iff r lies to the
// left of the directed line p -> q.
Wide cross2(const Point& p, const Point& q, const Point& r);

Orientation orientation(const Point& p, const Point& q, const Point& r);

// True iff p lies on the closed segment s.
bool on_segment(const Point& p, const Segment& s);

// True iff p lies on s minus its endpoints. Collinearity is not assumed.
bool strictly_inside_segment(const Point& p, const Segment& s);

// Exact classification of how two closed segments meet. Degenerate
// (zero-length) segments are not supported.
SegRelation segments_intersect(const Segment& s, const Segment& t);

// Location of p relative to the closed polygonal ring (even-odd rule, exact
// half-open ray cast). The ring need not be simple for Boundary answers, but
// Interior/Exterior assume simplicity. `scale` multiplies ring coordinates,
// letting callers query midpoints (scale 2) or centroids (scale 3) without
// leaving the integer grid.
PointLocation point_in_ring(const Point& p, std::span<const Point> ring,
                            Coord scale = 1);

// Location of p relative to the region bounded by rings[0] minus the interiors
// of rings[1..]. Assumes the rings form a valid region.
PointLocation point_in_rings(const Point& p,
                             std::span<const std::vector<Point>> rings,
                             Coord scale = 1);

// True iff the open segment (s.a, s.b) lies entirely in the open region
// bounded by rings[0] minus closed holes rings[1..]. Endpoints are expected to
// be vertices of the rings; they are exempt from the crossing tests.
bool segment_interior_in_region_interior(
    const Segment& s, std::span<const std::vector<Point>> rings);

// Twice the signed area of the ring (positive for counterclockwise).
Wide ring_doubled_area(std::span<const Point> ring);

// Compares sqrt(p) + sqrt(q) with sqrt(r) + sqrt(s) exactly; arguments are
// non-negative squared lengths. Returns -1, 0, or +1.
int compare_sqrt_sums(Wide p, Wide q, Wide r, Wide s);

}  // namespace noncross
