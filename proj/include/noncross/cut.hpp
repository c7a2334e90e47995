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

#include <optional>
#include <vector>

#include "noncross/complex.hpp"
#include "noncross/region.hpp"

namespace noncross {

// One piece of a cut region. `rings` lists the piece boundary (outer ring
// first); parent[r][i] is the vertex index in the parent region that
// rings[r][i] copies. A pinched piece arises from a cut joining two boundary
// components: the merged walk passes through each cut endpoint twice, so it
// is not a valid Region (duplicate vertices) and `region` stays empty.
struct CutPiece {
  std::vector<std::vector<Point>> rings;
  std::vector<std::vector<int>> parent;
  bool pinched = false;
  std::optional<Region> region;
};

struct CutResult {
  bool separating = false;
  std::vector<CutPiece> pieces;  // two when separating, one otherwise
};

// Cuts the region along a diagonal. A diagonal with both endpoints on the
// same ring separates the region into two sub-regions; a diagonal joining two
// rings merges them into one boundary walk with the cut endpoints duplicated,
// dropping the hole count by one.
CutResult cut_along_diagonal(const Region& region, const Diagonal& d);

// A diagonal of a cut piece, in piece-local vertex indexing together with the
// parent diagonal it descends from (duplicated endpoints collapse back to
// their parent index).
struct PieceDiagonal {
  Diagonal local;
  Diagonal parent;
};

// Diagonals of a piece, enumerated from the piece geometry. For a validated
// piece this is Region::diagonals() plus the index translation; for a pinched
// piece the enumeration runs against the parent interior minus the cut
// segment, which is the piece's interior.
std::vector<PieceDiagonal> piece_diagonals(const Region& parent,
                                           const Diagonal& cut,
                                           const CutPiece& piece);

// θ of a cut piece built from piece_diagonals; the crossing relation is
// inherited from the parent geometry. Labels carry piece-local indices.
Complex piece_complex(const Region& parent, const Diagonal& cut,
                      const CutPiece& piece,
                      std::size_t max_faces = kDefaultMaxFaces);

}  // namespace noncross
