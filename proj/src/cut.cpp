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

#include "noncross/cut.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "noncross/error.hpp"

namespace noncross {

namespace {

struct Walk {
  std::vector<Point> pts;
  std::vector<int> parents;
  Wide area2 = 0;
};

// Ring positions from..to inclusive, cyclic, in stored order.
Walk arc_walk(const Region& region, int ring, int from, int to) {
  Walk w;
  const auto pts = region.ring(ring);
  const int m = static_cast<int>(pts.size());
  const int start = region.ring_start(ring);
  for (int p = from;; p = (p + 1) % m) {
    w.pts.push_back(pts[static_cast<std::size_t>(p)]);
    w.parents.push_back(start + p);
    if (p == to) break;
  }
  w.area2 = ring_doubled_area(w.pts);
  return w;
}

CutResult cut_same_ring(const Region& region, const Diagonal& d, int rb) {
  const int start = region.ring_start(rb);
  Walk w1 = arc_walk(region, rb, d.u - start, d.v - start);
  Walk w2 = arc_walk(region, rb, d.v - start, d.u - start);

  CutResult out;
  out.separating = true;
  out.pieces.resize(2);

  if (rb == 0) {
    // Both walks follow the outer ring counterclockwise, so both bound their
    // piece positively and become piece outer rings.
    if (w1.area2 <= 0 || w2.area2 <= 0) {
      throw Error(Errc::InvariantViolation, "outer cut walk not positive");
    }
    for (int side = 0; side < 2; ++side) {
      Walk& w = side == 0 ? w1 : w2;
      out.pieces[side].rings.push_back(std::move(w.pts));
      out.pieces[side].parent.push_back(std::move(w.parents));
    }
    for (int r = 1; r < region.ring_count(); ++r) {
      const Point witness = region.ring(r)[0];
      const bool in1 =
          point_in_ring(witness, out.pieces[0].rings[0]) == PointLocation::Interior;
      const bool in2 =
          point_in_ring(witness, out.pieces[1].rings[0]) == PointLocation::Interior;
      if (in1 == in2) {
        throw Error(Errc::InvariantViolation,
                    "hole " + std::to_string(r) + " not on one cut side");
      }
      CutPiece& piece = in1 ? out.pieces[0] : out.pieces[1];
      piece.rings.emplace_back(region.ring(r).begin(), region.ring(r).end());
      std::vector<int> parents(region.ring(r).size());
      for (std::size_t i = 0; i < parents.size(); ++i) {
        parents[i] = region.ring_start(r) + static_cast<int>(i);
      }
      piece.parent.push_back(std::move(parents));
    }
  } else {
    // A chord on a hole ring pinches off a pocket: exactly one walk runs
    // counterclockwise and bounds the pocket piece; the other stays clockwise
    // and remains a hole of the piece that keeps the outer ring.
    const bool first_positive = w1.area2 > 0;
    if (!(first_positive ? w2.area2 < 0 : w2.area2 > 0) ||
        w1.area2 == 0 || w2.area2 == 0) {
      throw Error(Errc::InvariantViolation, "hole cut walk areas inconsistent");
    }
    Walk& pocket_walk = first_positive ? w1 : w2;
    Walk& hole_walk = first_positive ? w2 : w1;
    CutPiece& pocket = first_positive ? out.pieces[0] : out.pieces[1];
    CutPiece& keeper = first_positive ? out.pieces[1] : out.pieces[0];

    pocket.rings.push_back(pocket_walk.pts);
    pocket.parent.push_back(pocket_walk.parents);

    keeper.rings.emplace_back(region.ring(0).begin(), region.ring(0).end());
    std::vector<int> outer_parents(region.ring(0).size());
    for (std::size_t i = 0; i < outer_parents.size(); ++i) {
      outer_parents[i] = static_cast<int>(i);
    }
    keeper.parent.push_back(std::move(outer_parents));
    keeper.rings.push_back(hole_walk.pts);
    keeper.parent.push_back(hole_walk.parents);

    for (int r = 1; r < region.ring_count(); ++r) {
      if (r == rb) continue;
      const Point witness = region.ring(r)[0];
      CutPiece& piece =
          point_in_ring(witness, pocket.rings[0]) == PointLocation::Interior
              ? pocket
              : keeper;
      piece.rings.emplace_back(region.ring(r).begin(), region.ring(r).end());
      std::vector<int> parents(region.ring(r).size());
      for (std::size_t i = 0; i < parents.size(); ++i) {
        parents[i] = region.ring_start(r) + static_cast<int>(i);
      }
      piece.parent.push_back(std::move(parents));
    }
  }

  for (CutPiece& piece : out.pieces) {
    piece.region = Region::validate(piece.rings);
  }
  return out;
}

CutResult cut_two_rings(const Region& region, const Diagonal& d, int ra,
                        int rb) {
  const auto ring_a = region.ring(ra);
  const auto ring_b = region.ring(rb);
  const int p = static_cast<int>(ring_a.size());
  const int q = static_cast<int>(ring_b.size());
  const int pu = d.u - region.ring_start(ra);
  const int pv = d.v - region.ring_start(rb);

  // Keyhole merge: walk ring a in stored order and, at u, detour around the
  // whole of ring b starting and ending at v. Both u and v appear twice; the
  // cut segment appears twice as a walk edge, once in each direction. Stored
  // orientations (outer CCW, holes CW) keep the region interior on the left
  // of every walk edge, so the merged walk inherits a consistent orientation.
  std::vector<Point> merged;
  std::vector<int> parents;
  merged.reserve(static_cast<std::size_t>(p + q + 2));
  for (int i = 0; i < p; ++i) {
    merged.push_back(ring_a[static_cast<std::size_t>(i)]);
    parents.push_back(region.ring_start(ra) + i);
    if (i == pu) {
      for (int j = 0; j <= q; ++j) {
        const int bpos = (pv + j) % q;
        merged.push_back(ring_b[static_cast<std::size_t>(bpos)]);
        parents.push_back(region.ring_start(rb) + bpos);
      }
      merged.push_back(ring_a[static_cast<std::size_t>(pu)]);
      parents.push_back(d.u);
    }
  }

  CutResult out;
  out.separating = false;
  out.pieces.resize(1);
  CutPiece& piece = out.pieces[0];
  piece.pinched = true;
  for (int r = 0; r < region.ring_count(); ++r) {
    if (r == rb) continue;
    if (r == ra) {
      piece.rings.push_back(merged);
      piece.parent.push_back(parents);
      continue;
    }
    piece.rings.emplace_back(region.ring(r).begin(), region.ring(r).end());
    std::vector<int> ring_parents(region.ring(r).size());
    for (std::size_t i = 0; i < ring_parents.size(); ++i) {
      ring_parents[i] = region.ring_start(r) + static_cast<int>(i);
    }
    piece.parent.push_back(std::move(ring_parents));
  }
  return out;
}

// Flat indexing over a piece's rings.
struct PieceIndex {
  explicit PieceIndex(const CutPiece& piece) : piece_(&piece) {
    starts_.push_back(0);
    for (const auto& ring : piece.rings) {
      starts_.push_back(starts_.back() + static_cast<int>(ring.size()));
    }
  }

  int total() const { return starts_.back(); }

  int ring_of(int local) const {
    int r = 0;
    while (starts_[static_cast<std::size_t>(r + 1)] <= local) ++r;
    return r;
  }

  Point pt(int local) const {
    const int r = ring_of(local);
    return piece_->rings[static_cast<std::size_t>(r)]
                        [static_cast<std::size_t>(local - starts_[static_cast<std::size_t>(r)])];
  }

  int parent_of(int local) const {
    const int r = ring_of(local);
    return piece_->parent[static_cast<std::size_t>(r)]
                         [static_cast<std::size_t>(local - starts_[static_cast<std::size_t>(r)])];
  }

  bool adjacent(int a, int b) const {
    const int r = ring_of(a);
    if (r != ring_of(b)) return false;
    const int m = starts_[static_cast<std::size_t>(r + 1)] -
                  starts_[static_cast<std::size_t>(r)];
    const int la = a - starts_[static_cast<std::size_t>(r)];
    const int lb = b - starts_[static_cast<std::size_t>(r)];
    return (la + 1) % m == lb || (lb + 1) % m == la;
  }

  // Neighbours of `local` on its piece ring, in walk order.
  std::pair<Point, Point> neighbours(int local) const {
    const int r = ring_of(local);
    const auto& ring = piece_->rings[static_cast<std::size_t>(r)];
    const int m = static_cast<int>(ring.size());
    const int l = local - starts_[static_cast<std::size_t>(r)];
    return {ring[static_cast<std::size_t>((l + m - 1) % m)],
            ring[static_cast<std::size_t>((l + 1) % m)]};
  }

 private:
  const CutPiece* piece_;
  std::vector<int> starts_;
};

Wide cross_vec(const Point& a, const Point& b) {
  return Wide(a.x) * Wide(b.y) - Wide(a.y) * Wide(b.x);
}

// Whether direction (target - x) points into the region wedge at a walk
// vertex x with walk neighbours (prev, next). The region interior lies on the
// left of every walk edge.
bool wedge_contains(const Point& prev, const Point& x, const Point& next,
                    const Point& target) {
  const Point vin{x.x - prev.x, x.y - prev.y};
  const Point vout{next.x - x.x, next.y - x.y};
  const Point dir{target.x - x.x, target.y - x.y};
  const Wide corner = cross_vec(vin, vout);
  const bool left_in = cross_vec(vin, dir) > 0;
  const bool left_out = cross_vec(vout, dir) > 0;
  if (corner > 0) return left_in && left_out;
  if (corner < 0) return left_in || left_out;
  return left_out;
}

Diagonal normalized(int a, int b) {
  return a < b ? Diagonal{a, b} : Diagonal{b, a};
}

}  // namespace

CutResult cut_along_diagonal(const Region& region, const Diagonal& d) {
  const Diagonal cut = normalized(d.u, d.v);
  const int n = region.vertex_count();
  if (cut.u < 0 || cut.v >= n || !region.is_diagonal(cut.u, cut.v)) {
    throw Error(Errc::NotADiagonal,
                "(" + std::to_string(d.u) + "," + std::to_string(d.v) + ")");
  }
  const int ra = region.ring_of(cut.u);
  const int rb = region.ring_of(cut.v);
  if (ra == rb) return cut_same_ring(region, cut, ra);
  return cut_two_rings(region, cut, ra, rb);
}

std::vector<PieceDiagonal> piece_diagonals(const Region& parent,
                                           const Diagonal& cut,
                                           const CutPiece& piece) {
  std::vector<PieceDiagonal> out;
  const PieceIndex index(piece);

  if (!piece.pinched) {
    if (!piece.region.has_value()) {
      throw Error(Errc::InvariantViolation, "piece missing validated region");
    }
    for (const Diagonal& dl : piece.region->diagonals()) {
      out.push_back({dl, normalized(index.parent_of(dl.u), index.parent_of(dl.v))});
    }
    return out;
  }

  const Segment chord{parent.point(cut.u), parent.point(cut.v)};
  const int total = index.total();
  for (int i = 0; i < total; ++i) {
    for (int j = i + 1; j < total; ++j) {
      const Point a = index.pt(i), b = index.pt(j);
      if (a == b || index.adjacent(i, j)) continue;
      const Segment seg{a, b};
      // Piece interior = parent interior minus the cut segment.
      if (!segment_interior_in_region_interior(seg, parent.rings())) continue;
      const SegRelation rel = segments_intersect(seg, chord);
      if (rel != SegRelation::Disjoint &&
          rel != SegRelation::SharedEndpointOnly) {
        continue;
      }
      // A segment ending at a duplicated cut endpoint belongs to exactly one
      // of the two copies: the one whose boundary wedge it enters.
      bool attached = true;
      for (const auto& [local, other] : {std::pair{i, b}, std::pair{j, a}}) {
        const Point x = index.pt(local);
        if (x != chord.a && x != chord.b) continue;
        const auto [prev, next] = index.neighbours(local);
        if (!wedge_contains(prev, x, next, other)) attached = false;
      }
      if (!attached) continue;
      out.push_back({Diagonal{i, j},
                     normalized(index.parent_of(i), index.parent_of(j))});
    }
  }
  return out;
}

Complex piece_complex(const Region& parent, const Diagonal& cut,
                      const CutPiece& piece, std::size_t max_faces) {
  if (!piece.pinched) {
    if (!piece.region.has_value()) {
      throw Error(Errc::InvariantViolation, "piece missing validated region");
    }
    BuildOptions options;
    options.max_faces = max_faces;
    options.allow_void = true;
    return build_complex(*piece.region, options);
  }

  const PieceIndex index(piece);
  const auto diagonals = piece_diagonals(parent, cut, piece);
  const int dcount = static_cast<int>(diagonals.size());
  if (dcount > Face::kMaxBits) {
    throw Error(Errc::TooManyDiagonals,
                std::to_string(dcount) + " diagonals exceeds the supported 128");
  }
  std::vector<Diagonal> labels;
  labels.reserve(diagonals.size());
  for (const auto& pd : diagonals) labels.push_back(pd.local);
  std::vector<Face> rows(diagonals.size());
  for (int i = 0; i < dcount; ++i) {
    const auto& di = diagonals[static_cast<std::size_t>(i)].local;
    const Segment si{index.pt(di.u), index.pt(di.v)};
    for (int j = i + 1; j < dcount; ++j) {
      const auto& dj = diagonals[static_cast<std::size_t>(j)].local;
      if (di.u == dj.u || di.u == dj.v || di.v == dj.u || di.v == dj.v) continue;
      const Segment sj{index.pt(dj.u), index.pt(dj.v)};
      switch (segments_intersect(si, sj)) {
        case SegRelation::ProperCrossing:
        case SegRelation::Touching:
        case SegRelation::Overlapping:
          rows[static_cast<std::size_t>(i)].set(j);
          rows[static_cast<std::size_t>(j)].set(i);
          break;
        case SegRelation::Disjoint:
        case SegRelation::SharedEndpointOnly:
          break;
      }
    }
  }
  return Complex::from_crossing(std::move(labels), std::move(rows), max_faces);
}

}  // namespace noncross
