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

#include "noncross/geom.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace noncross {

namespace {

using BigInt = boost::multiprecision::cpp_int;

Point scaled(const Point& p, Coord s) { return {p.x * s, p.y * s}; }

int sign(Wide v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

Wide cross2(const Point& p, const Point& q, const Point& r) {
  return Wide(q.x - p.x) * Wide(r.y - p.y) - Wide(q.y - p.y) * Wide(r.x - p.x);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const Wide c = cross2(p, q, r);
  if (c > 0) return Orientation::Left;
  if (c < 0) return Orientation::Right;
  return Orientation::Collinear;
}

bool on_segment(const Point& p, const Segment& s) {
  if (cross2(s.a, s.b, p) != 0) return false;
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

bool strictly_inside_segment(const Point& p, const Segment& s) {
  return p != s.a && p != s.b && on_segment(p, s);
}

SegRelation segments_intersect(const Segment& s, const Segment& t) {
  const Point &a = s.a, &b = s.b, &c = t.a, &d = t.b;
  const int d1 = sign(cross2(c, d, a));
  const int d2 = sign(cross2(c, d, b));
  const int d3 = sign(cross2(a, b, c));
  const int d4 = sign(cross2(a, b, d));

  if (d1 * d2 < 0 && d3 * d4 < 0) return SegRelation::ProperCrossing;

  if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
    // All four points collinear: compare 1D extents along the dominant axis.
    const bool use_x = a.x != b.x || c.x != d.x;
    auto key = [use_x](const Point& p) { return use_x ? p.x : p.y; };
    const Coord lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
    const Coord lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
    if (hi1 < lo2 || hi2 < lo1) return SegRelation::Disjoint;
    if (hi1 == lo2 || hi2 == lo1) return SegRelation::SharedEndpointOnly;
    return SegRelation::Overlapping;
  }

  // Lines are distinct, so the segments meet in at most one point.
  if (a == c || a == d || b == c || b == d) return SegRelation::SharedEndpointOnly;
  if (on_segment(a, t) || on_segment(b, t) || on_segment(c, s) ||
      on_segment(d, s)) {
    return SegRelation::Touching;
  }
  return SegRelation::Disjoint;
}

PointLocation point_in_ring(const Point& p, std::span<const Point> ring,
                            Coord scale) {
  const std::size_t m = ring.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Segment e{scaled(ring[i], scale), scaled(ring[(i + 1) % m], scale)};
    if (on_segment(p, e)) return PointLocation::Boundary;
  }
  // Even-odd ray cast toward +x with the half-open rule in y: an edge counts
  // iff its endpoints straddle the horizontal line through p and the crossing
  // lies strictly right of p. Exact because p is never on an edge here.
  bool inside = false;
  for (std::size_t i = 0; i < m; ++i) {
    const Point A = scaled(ring[i], scale);
    const Point B = scaled(ring[(i + 1) % m], scale);
    if ((A.y > p.y) != (B.y > p.y)) {
      const Wide o = cross2(A, B, p);
      if ((o > 0) == (B.y > A.y)) inside = !inside;
    }
  }
  return inside ? PointLocation::Interior : PointLocation::Exterior;
}

PointLocation point_in_rings(const Point& p,
                             std::span<const std::vector<Point>> rings,
                             Coord scale) {
  const PointLocation outer = point_in_ring(p, rings[0], scale);
  if (outer != PointLocation::Interior) return outer;
  for (std::size_t h = 1; h < rings.size(); ++h) {
    const PointLocation loc = point_in_ring(p, rings[h], scale);
    if (loc == PointLocation::Boundary) return PointLocation::Boundary;
    if (loc == PointLocation::Interior) return PointLocation::Exterior;
  }
  return PointLocation::Interior;
}

bool segment_interior_in_region_interior(
    const Segment& s, std::span<const std::vector<Point>> rings) {
  for (const auto& ring : rings) {
    const std::size_t m = ring.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Segment e{ring[i], ring[(i + 1) % m]};
      switch (segments_intersect(s, e)) {
        case SegRelation::ProperCrossing:
        case SegRelation::Overlapping:
          return false;
        case SegRelation::Touching:
          // A contact at an endpoint of s is outside the open segment and
          // therefore allowed; a boundary vertex inside the open segment is
          // not.
          if (strictly_inside_segment(e.a, s) ||
              strictly_inside_segment(e.b, s)) {
            return false;
          }
          break;
        case SegRelation::Disjoint:
        case SegRelation::SharedEndpointOnly:
          break;
      }
    }
    for (const Point& v : ring) {
      if (strictly_inside_segment(v, s)) return false;
    }
  }
  // The open segment avoids the boundary, so it lies entirely inside or
  // entirely outside; the doubled midpoint decides which.
  const Point mid{s.a.x + s.b.x, s.a.y + s.b.y};
  return point_in_rings(mid, rings, 2) == PointLocation::Interior;
}

Wide ring_doubled_area(std::span<const Point> ring) {
  Wide area = 0;
  const std::size_t m = ring.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % m];
    area += Wide(p.x) * Wide(q.y) - Wide(q.x) * Wide(p.y);
  }
  return area;
}

namespace {

// Compares sqrt(x) with c + sqrt(y) for non-negative x, y and arbitrary c.
int compare_sqrt_offset(const BigInt& x, const BigInt& c, const BigInt& y) {
  if (c < 0) return -compare_sqrt_offset(y, -c, x);
  // Both sides non-negative: compare squares, x vs c^2 + y + 2c*sqrt(y).
  const BigInt t = x - c * c - y;
  if (t < 0) return -1;
  const BigInt lhs = t * t;
  const BigInt rhs = 4 * c * c * y;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

}  // namespace

namespace {

BigInt to_big(Wide v) {
  const bool neg = v < 0;
  if (neg) v = -v;
  BigInt out = static_cast<std::uint64_t>(v >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(v);
  return neg ? -out : out;
}

}  // namespace

int compare_sqrt_sums(Wide p, Wide q, Wide r, Wide s) {
  // Square once: p + q + 2*sqrt(pq) vs r + s + 2*sqrt(rs); both sides of the
  // original comparison are non-negative so squaring preserves order.
  const BigInt bp = to_big(p), bq = to_big(q), br = to_big(r), bs = to_big(s);
  const BigInt lhs_sq = 4 * bp * bq;
  const BigInt rhs_sq = 4 * br * bs;
  const BigInt c = (br + bs) - (bp + bq);
  return compare_sqrt_offset(lhs_sq, c, rhs_sq);
}

}  // namespace noncross
