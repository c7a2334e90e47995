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
#include <utility>
#include <vector>

#include "noncross/face.hpp"
#include "noncross/region.hpp"

namespace noncross {

inline constexpr std::size_t kDefaultMaxFaces = 5'000'000;

struct BuildOptions {
  std::size_t max_faces = kDefaultMaxFaces;
  // Accept regions without diagonals, producing the void complex whose only
  // face is the empty set. Used internally for join identities; the public
  // pipeline rejects such regions instead.
  bool allow_void = false;
};

// Face counts by cardinality; index c counts faces with c members, so index 0
// counts the empty face (dimension -1) and index c counts dimension c-1.
class FVector {
 public:
  FVector() = default;
  explicit FVector(std::vector<long long> by_card)
      : by_card_(std::move(by_card)) {}

  const std::vector<long long>& by_card() const { return by_card_; }
  // k ranges over dimensions, -1 through dim().
  long long by_dim(int k) const;
  int dim() const { return static_cast<int>(by_card_.size()) - 2; }

  long long euler() const;          // sum over dimensions k >= 0
  long long reduced_euler() const;  // includes the empty face at k = -1

  // f-vector of the join: convolution of the cardinality counts.
  static FVector convolve(const FVector& a, const FVector& b);

  friend bool operator==(const FVector&, const FVector&) = default;

 private:
  std::vector<long long> by_card_;
};

// An abstract simplicial complex on at most 128 vertices, stored as the full
// face list of the flag complex of a "compatibility" graph: faces are exactly
// the sets with no crossing pair. Complexes are immutable; faces are kept in
// canonical order (cardinality, then numeric bitset value), which groups each
// cardinality into a contiguous id range.
class Complex {
 public:
  // labels[i] names vertex i; crossing_rows[i] is the set of vertices
  // crossing vertex i (irreflexive, symmetric). Enumerates every face.
  static Complex from_crossing(std::vector<Diagonal> labels,
                               std::vector<Face> crossing_rows,
                               std::size_t max_faces = kDefaultMaxFaces);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<Diagonal>& labels() const { return labels_; }
  const Diagonal& label(int v) const;

  bool crossing(int a, int b) const;
  Face crossing_mask(int v) const;
  // Vertices that can extend a face containing v (complement of the crossing
  // row, minus v itself).
  Face noncrossing_mask(int v) const;

  const std::vector<Face>& faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }
  // Id of a face in canonical order, or -1 when absent.
  std::int64_t face_id(const Face& f) const;
  bool is_face(const Face& f) const { return face_id(f) >= 0; }
  // Contiguous id range [first, last) of the faces with c members.
  std::pair<std::size_t, std::size_t> cardinality_range(int c) const;

  int max_cardinality() const { return max_cardinality_; }
  int dim() const { return max_cardinality_ - 1; }
  bool pure() const { return pure_; }
  const std::vector<std::uint32_t>& facet_ids() const { return facet_ids_; }

  FVector f_vector() const;

 private:
  Complex() = default;

  std::vector<Diagonal> labels_;
  std::vector<Face> crossing_;
  std::vector<Face> faces_;              // canonical order
  std::vector<std::size_t> card_first_;  // card_first_[c] = first id with c members
  std::vector<std::uint32_t> facet_ids_;
  int max_cardinality_ = 0;
  bool pure_ = true;
};

// True iff the two diagonals cross: their open segments intersect. Sharing an
// endpoint vertex is not crossing.
bool crossing(const Region& region, const Diagonal& a, const Diagonal& b);

// Euler characteristic over the nonempty faces.
long long euler_characteristic(const Complex& cplx);

// Builds the complex of non-crossing diagonals of the region and verifies
// that it is pure with facets of exactly n + 3h - 3 diagonals.
Complex build_complex(const Region& region, const BuildOptions& options = {});

struct TilingStats {
  int triangle_count = 0;
  Wide doubled_area_sum = 0;
};

// Checks that a facet's diagonals plus the boundary edges tile the region
// with exactly n + 2h - 2 triangles whose doubled areas sum to the region's
// doubled area.
bool triangulation_is_tiling(const Region& region, const Complex& cplx,
                             const Face& facet, TilingStats* stats = nullptr);

// Subcomplex {σ : v ∉ σ, σ ∪ {v} is a face}, re-indexed over the vertices
// compatible with v.
Complex link(const Complex& cplx, int v);

// Subcomplex of the faces avoiding v, re-indexed over the other vertices.
Complex deletion(const Complex& cplx, int v);

// Join: faces are unions of one face from each factor, vertex sets kept
// disjoint by re-indexing (labels concatenate; b's vertices shift up by
// a.vertex_count()).
Complex join(const Complex& a, const Complex& b,
             std::size_t max_faces = kDefaultMaxFaces);

// Cone: join with a single extra vertex carrying `apex_label`.
Complex cone(const Complex& cplx, const Diagonal& apex_label = {-1, -1});

struct BoundaryInfo {
  std::vector<std::uint32_t> free_codim1;  // codim-1 faces in exactly 1 facet
  std::vector<std::uint32_t> closure;      // all subfaces of the free faces
  bool pseudomanifold = false;             // every codim-1 face in <= 2 facets
  bool closed = false;                     // every codim-1 face in exactly 2
  std::vector<bool> vertex_on_boundary;
  bool all_vertices_on_boundary = false;
};

// Boundary structure of a pure complex. Throws NotPure otherwise.
BoundaryInfo boundary_faces(const Complex& cplx);

}  // namespace noncross
