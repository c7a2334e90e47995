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

#include "noncross/complex.hpp"

#include <algorithm>
#include <string>

#include "noncross/error.hpp"

namespace noncross {

long long FVector::by_dim(int k) const {
  const int c = k + 1;
  if (c < 0 || c >= static_cast<int>(by_card_.size())) return 0;
  return by_card_[static_cast<std::size_t>(c)];
}

long long FVector::euler() const {
  long long sum = 0;
  for (std::size_t c = 1; c < by_card_.size(); ++c) {
    sum += (c % 2 == 1 ? 1 : -1) * by_card_[c];
  }
  return sum;
}

long long FVector::reduced_euler() const {
  return euler() - (by_card_.empty() ? 0 : by_card_[0]);
}

FVector FVector::convolve(const FVector& a, const FVector& b) {
  const auto& fa = a.by_card_;
  const auto& fb = b.by_card_;
  if (fa.empty() || fb.empty()) return FVector{};
  std::vector<long long> out(fa.size() + fb.size() - 1, 0);
  for (std::size_t i = 0; i < fa.size(); ++i) {
    for (std::size_t j = 0; j < fb.size(); ++j) {
      out[i + j] += fa[i] * fb[j];
    }
  }
  return FVector{std::move(out)};
}

Complex Complex::from_crossing(std::vector<Diagonal> labels,
                               std::vector<Face> crossing_rows,
                               std::size_t max_faces) {
  const std::size_t d = labels.size();
  if (d > Face::kMaxBits) {
    throw Error(Errc::TooManyDiagonals,
                std::to_string(d) + " diagonals exceeds the supported 128");
  }
  if (crossing_rows.size() != d) {
    throw Error(Errc::InvariantViolation, "crossing matrix size mismatch");
  }
  const Face universe = Face::all(static_cast<int>(d));
  for (std::size_t i = 0; i < d; ++i) {
    if (crossing_rows[i].test(static_cast<int>(i)) ||
        !universe.contains(crossing_rows[i])) {
      throw Error(Errc::InvariantViolation, "crossing matrix not irreflexive");
    }
    for (int j = crossing_rows[i].first(); j >= 0;
         j = crossing_rows[i].next(j)) {
      if (!crossing_rows[static_cast<std::size_t>(j)].test(
              static_cast<int>(i))) {
        throw Error(Errc::InvariantViolation, "crossing matrix not symmetric");
      }
    }
  }

  Complex out;
  out.labels_ = std::move(labels);
  out.crossing_ = std::move(crossing_rows);

  // Depth-first enumeration of all compatible sets. `compat` holds every
  // vertex extending the current face; restricting growth to indices above
  // the face's maximum yields each face exactly once. compat empty marks a
  // maximal face.
  std::vector<Face> facets;
  struct Node {
    Face face;
    Face compat;
    int from;
  };
  std::vector<Node> stack;
  stack.push_back({Face{}, universe, 0});
  while (!stack.empty()) {
    const Node node = stack.back();
    stack.pop_back();
    out.faces_.push_back(node.face);
    if (out.faces_.size() > max_faces) {
      throw Error(Errc::FaceLimitExceeded,
                  "more than " + std::to_string(max_faces) + " faces");
    }
    if (node.compat.empty()) facets.push_back(node.face);
    for (int v = node.compat.next(node.from - 1); v >= 0;
         v = node.compat.next(v)) {
      Face f = node.face;
      f.set(v);
      const Face compat = node.compat & out.noncrossing_mask(v);
      stack.push_back({f, compat, v + 1});
    }
  }

  std::sort(out.faces_.begin(), out.faces_.end(), canonical_face_less);

  out.max_cardinality_ = out.faces_.empty() ? 0 : out.faces_.back().count();
  out.card_first_.assign(static_cast<std::size_t>(out.max_cardinality_) + 2, 0);
  for (const Face& f : out.faces_) {
    ++out.card_first_[static_cast<std::size_t>(f.count()) + 1];
  }
  for (std::size_t c = 1; c < out.card_first_.size(); ++c) {
    out.card_first_[c] += out.card_first_[c - 1];
  }

  out.facet_ids_.reserve(facets.size());
  bool pure = true;
  for (const Face& f : facets) {
    if (f.count() != out.max_cardinality_) pure = false;
    out.facet_ids_.push_back(static_cast<std::uint32_t>(out.face_id(f)));
  }
  std::sort(out.facet_ids_.begin(), out.facet_ids_.end());
  out.pure_ = pure;
  return out;
}

const Diagonal& Complex::label(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw Error(Errc::IndexOutOfRange, "complex vertex " + std::to_string(v));
  }
  return labels_[static_cast<std::size_t>(v)];
}

bool Complex::crossing(int a, int b) const {
  label(a);
  return crossing_[static_cast<std::size_t>(a)].test(b);
}

Face Complex::crossing_mask(int v) const {
  label(v);
  return crossing_[static_cast<std::size_t>(v)];
}

Face Complex::noncrossing_mask(int v) const {
  Face mask = Face::all(vertex_count()) - crossing_mask(v);
  mask.reset(v);
  return mask;
}

std::int64_t Complex::face_id(const Face& f) const {
  const int c = f.count();
  if (c > max_cardinality_) return -1;
  const auto first = faces_.begin() +
                     static_cast<std::ptrdiff_t>(card_first_[static_cast<std::size_t>(c)]);
  const auto last = faces_.begin() +
                    static_cast<std::ptrdiff_t>(card_first_[static_cast<std::size_t>(c) + 1]);
  const auto it = std::lower_bound(first, last, f);
  if (it == last || *it != f) return -1;
  return it - faces_.begin();
}

std::pair<std::size_t, std::size_t> Complex::cardinality_range(int c) const {
  if (c < 0 || c > max_cardinality_) return {0, 0};
  return {card_first_[static_cast<std::size_t>(c)],
          card_first_[static_cast<std::size_t>(c) + 1]};
}

FVector Complex::f_vector() const {
  std::vector<long long> by_card(static_cast<std::size_t>(max_cardinality_) + 1);
  for (int c = 0; c <= max_cardinality_; ++c) {
    const auto [first, last] = cardinality_range(c);
    by_card[static_cast<std::size_t>(c)] = static_cast<long long>(last - first);
  }
  return FVector{std::move(by_card)};
}

long long euler_characteristic(const Complex& cplx) {
  return cplx.f_vector().euler();
}

bool crossing(const Region& region, const Diagonal& a, const Diagonal& b) {
  if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
  switch (segments_intersect({region.point(a.u), region.point(a.v)},
                             {region.point(b.u), region.point(b.v)})) {
    case SegRelation::ProperCrossing:
    case SegRelation::Touching:
    case SegRelation::Overlapping:
      return true;
    case SegRelation::Disjoint:
    case SegRelation::SharedEndpointOnly:
      return false;
  }
  return false;
}

Complex build_complex(const Region& region, const BuildOptions& options) {
  const std::vector<Diagonal> diagonals = region.diagonals();
  if (diagonals.empty() && !options.allow_void) {
    throw Error(Errc::NoDiagonals, "region admits no diagonals");
  }
  const int d = static_cast<int>(diagonals.size());
  if (d > Face::kMaxBits) {
    throw Error(Errc::TooManyDiagonals,
                std::to_string(d) + " diagonals exceeds the supported 128");
  }
  std::vector<Face> rows(diagonals.size());
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (crossing(region, diagonals[static_cast<std::size_t>(i)],
                   diagonals[static_cast<std::size_t>(j)])) {
        rows[static_cast<std::size_t>(i)].set(j);
        rows[static_cast<std::size_t>(j)].set(i);
      }
    }
  }
  Complex out = Complex::from_crossing(diagonals, std::move(rows),
                                       options.max_faces);
  const int expected =
      region.vertex_count() + 3 * region.hole_count() - 3;
  if (d > 0) {
    if (!out.pure()) {
      throw Error(Errc::InvariantViolation, "complex is not pure");
    }
    if (out.max_cardinality() != expected) {
      throw Error(Errc::InvariantViolation,
                  "facet size " + std::to_string(out.max_cardinality()) +
                      ", expected " + std::to_string(expected));
    }
  }
  return out;
}

bool triangulation_is_tiling(const Region& region, const Complex& cplx,
                             const Face& facet, TilingStats* stats) {
  const int n = region.vertex_count();
  // Adjacency of the tiling graph: boundary edges plus the facet's diagonals.
  std::vector<bool> edge(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
  const auto connect = [&](int a, int b) {
    edge[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
         static_cast<std::size_t>(b)] = true;
    edge[static_cast<std::size_t>(b) * static_cast<std::size_t>(n) +
         static_cast<std::size_t>(a)] = true;
  };
  for (int v = 0; v < n; ++v) connect(v, region.next_in_ring(v));
  for (int v = facet.first(); v >= 0; v = facet.next(v)) {
    const Diagonal& d = cplx.label(v);
    connect(d.u, d.v);
  }
  const auto connected = [&](int a, int b) {
    return edge[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(b)];
  };

  // A tile is a vertex triple that is pairwise connected, has no vertex
  // strictly inside, and whose tripled centroid lies in the region interior.
  TilingStats local;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!connected(i, j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!connected(i, k) || !connected(j, k)) continue;
        const Point a = region.point(i), b = region.point(j), c = region.point(k);
        const Wide area2 = cross2(a, b, c);
        if (area2 == 0) continue;
        bool empty_interior = true;
        for (int u = 0; u < n && empty_interior; ++u) {
          if (u == i || u == j || u == k) continue;
          const Point p = region.point(u);
          const auto side = [&p](const Point& s, const Point& t) {
            const Wide o = cross2(s, t, p);
            return o > 0 ? 1 : (o < 0 ? -1 : 0);
          };
          const int s1 = side(a, b), s2 = side(b, c), s3 = side(c, a);
          if (s1 != 0 && s1 == s2 && s2 == s3) empty_interior = false;
        }
        if (!empty_interior) continue;
        const Point centroid{a.x + b.x + c.x, a.y + b.y + c.y};
        if (region.locate(centroid, 3) != PointLocation::Interior) continue;
        ++local.triangle_count;
        local.doubled_area_sum += area2 > 0 ? area2 : -area2;
      }
    }
  }
  if (stats != nullptr) *stats = local;
  const int expected = n + 2 * region.hole_count() - 2;
  return local.triangle_count == expected &&
         local.doubled_area_sum == region.doubled_area();
}

namespace {

// Re-index the sub-crossing-graph induced by the vertices in `keep`.
Complex induced(const Complex& cplx, const Face& keep, std::size_t max_faces) {
  std::vector<int> vertices;
  for (int v = keep.first(); v >= 0; v = keep.next(v)) vertices.push_back(v);
  std::vector<Diagonal> labels;
  labels.reserve(vertices.size());
  for (int v : vertices) labels.push_back(cplx.label(v));
  std::vector<Face> rows(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (cplx.crossing(vertices[i], vertices[j])) {
        rows[i].set(static_cast<int>(j));
        rows[j].set(static_cast<int>(i));
      }
    }
  }
  return Complex::from_crossing(std::move(labels), std::move(rows), max_faces);
}

}  // namespace

Complex link(const Complex& cplx, int v) {
  return induced(cplx, cplx.noncrossing_mask(v), kDefaultMaxFaces);
}

Complex deletion(const Complex& cplx, int v) {
  Face keep = Face::all(cplx.vertex_count());
  cplx.label(v);
  keep.reset(v);
  return induced(cplx, keep, kDefaultMaxFaces);
}

Complex join(const Complex& a, const Complex& b, std::size_t max_faces) {
  const int da = a.vertex_count();
  const int db = b.vertex_count();
  std::vector<Diagonal> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::vector<Face> rows(static_cast<std::size_t>(da + db));
  for (int i = 0; i < da; ++i) rows[static_cast<std::size_t>(i)] = a.crossing_mask(i);
  for (int i = 0; i < db; ++i) {
    const Face row = b.crossing_mask(i);
    Face shifted;
    for (int j = row.first(); j >= 0; j = row.next(j)) shifted.set(j + da);
    rows[static_cast<std::size_t>(da + i)] = shifted;
  }
  return Complex::from_crossing(std::move(labels), std::move(rows), max_faces);
}

Complex cone(const Complex& cplx, const Diagonal& apex_label) {
  Complex point = Complex::from_crossing({apex_label}, {Face{}});
  return join(cplx, point);
}

BoundaryInfo boundary_faces(const Complex& cplx) {
  if (!cplx.pure()) {
    throw Error(Errc::NotPure, "boundary structure requires a pure complex");
  }
  BoundaryInfo info;
  info.vertex_on_boundary.assign(static_cast<std::size_t>(cplx.vertex_count()),
                                 false);
  const int top = cplx.max_cardinality();
  if (top == 0) {
    // Void complex: the empty face is the unique facet; no codim-1 faces.
    info.pseudomanifold = true;
    info.closed = true;
    info.all_vertices_on_boundary = cplx.vertex_count() == 0;
    return info;
  }
  const auto [first, last] = cplx.cardinality_range(top - 1);
  std::vector<int> facet_count(last - first, 0);
  for (const std::uint32_t fid : cplx.facet_ids()) {
    const Face facet = cplx.faces()[fid];
    for (int v = facet.first(); v >= 0; v = facet.next(v)) {
      Face sub = facet;
      sub.reset(v);
      const std::int64_t id = cplx.face_id(sub);
      ++facet_count[static_cast<std::size_t>(id) - first];
    }
  }

  info.pseudomanifold = true;
  info.closed = true;
  Face boundary_union;
  for (std::size_t i = 0; i < facet_count.size(); ++i) {
    if (facet_count[i] == 1) {
      info.free_codim1.push_back(static_cast<std::uint32_t>(first + i));
      info.closed = false;
    } else if (facet_count[i] != 2) {
      info.pseudomanifold = false;
      info.closed = false;
    }
  }

  std::vector<bool> in_closure(cplx.face_count(), false);
  for (const std::uint32_t fid : info.free_codim1) {
    const Face free = cplx.faces()[fid];
    boundary_union = boundary_union | free;
    // Enumerate every subset of the free face, empty face included, via
    // (sub - 1) & free with a 128-bit borrow.
    Face sub = free;
    while (true) {
      in_closure[static_cast<std::size_t>(cplx.face_id(sub))] = true;
      if (sub.empty()) break;
      std::uint64_t lo = sub.lo(), hi = sub.hi();
      if (lo == 0) {
        hi -= 1;
        lo = ~std::uint64_t{0};
      } else {
        lo -= 1;
      }
      sub = Face(lo, hi) & free;
    }
  }
  for (std::size_t id = 0; id < in_closure.size(); ++id) {
    if (in_closure[id]) info.closure.push_back(static_cast<std::uint32_t>(id));
  }
  for (int v = boundary_union.first(); v >= 0; v = boundary_union.next(v)) {
    info.vertex_on_boundary[static_cast<std::size_t>(v)] = true;
  }
  info.all_vertices_on_boundary =
      boundary_union == Face::all(cplx.vertex_count());
  return info;
}

}  // namespace noncross
