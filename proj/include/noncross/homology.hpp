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

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "noncross/complex.hpp"
#include "noncross/region.hpp"

namespace noncross {

// Signed boundary operator ∂_k in the canonical face order. Rows are indexed
// by (k-1)-faces, columns by k-faces; a k-face has cardinality k+1. For k = 0
// the single row is the augmentation to the empty face, all entries +1.
struct BoundaryMatrix {
  int k = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  // Column-major; each column lists (row, sign) with rows ascending and
  // sign in {-1, +1}. Signs follow ascending vertex order within the face.
  std::vector<std::vector<std::pair<std::uint32_t, std::int8_t>>> columns;
};

BoundaryMatrix boundary_matrix(const Complex& cplx, int k);

// True iff lower ∘ upper is the zero matrix (lower.k + 1 == upper.k).
bool composition_is_zero(const BoundaryMatrix& lower,
                         const BoundaryMatrix& upper);

// Rank over GF(2) by bit-packed column elimination.
std::size_t gf2_rank(const BoundaryMatrix& m);

// Integer diagonalization outcome. torsion_free means every nonzero diagonal
// entry of the Smith form is a unit; rank counts the nonzero entries.
struct SmithSummary {
  bool ran = false;  // false when rows * cols exceeded the cap
  bool torsion_free = true;
  std::size_t rank = 0;
};

SmithSummary smith_summary(const BoundaryMatrix& m, std::size_t max_entries);

struct HomologyOptions {
  // Hard cap on rows * cols for the GF(2) elimination; MatrixTooLarge beyond.
  std::size_t max_entries = 64'000'000;
  // Soft cap for the arbitrary-precision diagonalization; larger matrices are
  // skipped and snf_complete reports false.
  std::size_t snf_max_entries = 4'000'000;
};

struct HomologyProfile {
  std::vector<long long> reduced_betti;  // indices 0 through dim
  bool torsion_free = true;
  bool snf_complete = true;
  bool euler_check = false;

  int top_nonzero() const {
    for (int k = static_cast<int>(reduced_betti.size()); k-- > 0;) {
      if (reduced_betti[static_cast<std::size_t>(k)] != 0) return k;
    }
    return -1;
  }
  bool all_zero() const { return top_nonzero() == -1; }
};

// Reduced Betti numbers over GF(2) for every dimension, with an integer
// Smith-form torsion check per boundary matrix (subject to the soft cap) and
// the alternating-sum consistency check against the f-vector.
HomologyProfile reduced_homology(const Complex& cplx,
                                 const HomologyOptions& options = {});

enum class ShapeClass { SphereLike, BallLike, Other };

// Homology-level proxy classification; it does not certify homeomorphism.
// SphereLike: reduced Betti numbers are 1 in dimension n+3h-4, 0 elsewhere.
// BallLike: all reduced Betti numbers vanish, the complex is pure of
// dimension n+3h-4, and the boundary subcomplex is nonempty.
ShapeClass classify(const HomologyProfile& profile, const Complex& cplx,
                    const Region& region);

std::string shape_class_name(ShapeClass shape);

}  // namespace noncross
