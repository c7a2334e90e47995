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

#include "noncross/homology.hpp"

#include <algorithm>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "noncross/error.hpp"

namespace noncross {

namespace {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace

BoundaryMatrix boundary_matrix(const Complex& cplx, int k) {
  BoundaryMatrix out;
  out.k = k;
  const auto [col_first, col_last] = cplx.cardinality_range(k + 1);
  const auto [row_first, row_last] = cplx.cardinality_range(k);
  out.rows = row_last - row_first;
  out.cols = col_last - col_first;
  out.columns.resize(out.cols);
  for (std::size_t id = col_first; id < col_last; ++id) {
    auto& column = out.columns[id - col_first];
    const Face face = cplx.faces()[id];
    int position = 0;
    for (int v = face.first(); v >= 0; v = face.next(v), ++position) {
      Face sub = face;
      sub.reset(v);
      const std::int64_t sub_id = cplx.face_id(sub);
      if (sub_id < 0) {
        throw Error(Errc::InvariantViolation,
                    "complex is not closed under subsets");
      }
      const std::int8_t sign = position % 2 == 0 ? 1 : -1;
      column.push_back({static_cast<std::uint32_t>(sub_id - row_first), sign});
    }
    std::sort(column.begin(), column.end());
  }
  return out;
}

bool composition_is_zero(const BoundaryMatrix& lower,
                         const BoundaryMatrix& upper) {
  if (lower.k + 1 != upper.k || lower.cols != upper.rows) return false;
  for (const auto& upper_col : upper.columns) {
    std::map<std::uint32_t, long long> accum;
    for (const auto& [mid, s1] : upper_col) {
      for (const auto& [row, s2] : lower.columns[mid]) {
        accum[row] += static_cast<long long>(s1) * s2;
      }
    }
    for (const auto& [row, value] : accum) {
      if (value != 0) return false;
    }
  }
  return true;
}

std::size_t gf2_rank(const BoundaryMatrix& m) {
  const std::size_t words = (m.rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> basis(m.rows);
  std::vector<std::uint64_t> column(words);
  std::size_t rank = 0;
  for (const auto& entries : m.columns) {
    std::fill(column.begin(), column.end(), 0);
    for (const auto& [row, sign] : entries) column[row / 64] ^= 1ull << (row % 64);
    while (true) {
      std::size_t pivot = m.rows;
      for (std::size_t w = words; w-- > 0;) {
        if (column[w] != 0) {
          pivot = w * 64 + (63 - static_cast<std::size_t>(
                                     __builtin_clzll(column[w])));
          break;
        }
      }
      if (pivot == m.rows) break;  // dependent column
      if (basis[pivot].empty()) {
        basis[pivot] = column;
        ++rank;
        break;
      }
      for (std::size_t w = 0; w < words; ++w) column[w] ^= basis[pivot][w];
    }
  }
  return rank;
}

SmithSummary smith_summary(const BoundaryMatrix& m, std::size_t max_entries) {
  SmithSummary out;
  if (m.rows * m.cols > max_entries) return out;
  out.ran = true;
  if (m.rows == 0 || m.cols == 0) return out;

  std::vector<std::vector<BigInt>> a(m.rows, std::vector<BigInt>(m.cols));
  for (std::size_t c = 0; c < m.cols; ++c) {
    for (const auto& [row, sign] : m.columns[c]) a[row][c] = sign;
  }

  const std::size_t steps = std::min(m.rows, m.cols);
  for (std::size_t t = 0; t < steps; ++t) {
    // Smallest-magnitude nonzero pivot in the trailing submatrix.
    std::size_t pi = m.rows, pj = m.cols;
    BigInt best = 0;
    for (std::size_t i = t; i < m.rows; ++i) {
      for (std::size_t j = t; j < m.cols; ++j) {
        if (a[i][j] == 0) continue;
        const BigInt mag = abs(a[i][j]);
        if (pi == m.rows || mag < best) {
          best = mag;
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
      if (best == 1) break;
    }
    if (pi == m.rows) break;  // trailing submatrix is zero
    std::swap(a[t], a[pi]);
    if (pj != t) {
      for (std::size_t i = 0; i < m.rows; ++i) std::swap(a[i][t], a[i][pj]);
    }

    // Clear row and column t; each pivot swap shrinks |a[t][t]|, so the
    // outer loop terminates.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < m.rows; ++i) {
        while (a[i][t] != 0) {
          const BigInt q = a[i][t] / a[t][t];
          for (std::size_t j = t; j < m.cols; ++j) a[i][j] -= q * a[t][j];
          if (a[i][t] != 0) std::swap(a[t], a[i]);
        }
      }
      for (std::size_t j = t + 1; j < m.cols; ++j) {
        while (a[t][j] != 0) {
          const BigInt q = a[t][j] / a[t][t];
          for (std::size_t i = t; i < m.rows; ++i) a[i][j] -= q * a[i][t];
          if (a[t][j] != 0) {
            for (std::size_t i = t; i < m.rows; ++i) std::swap(a[i][j], a[i][t]);
            dirty = true;  // the swapped-in column may repopulate column t
          }
        }
      }
    }
    ++out.rank;
    if (abs(a[t][t]) != 1) out.torsion_free = false;
  }
  return out;
}

HomologyProfile reduced_homology(const Complex& cplx,
                                 const HomologyOptions& options) {
  HomologyProfile out;
  const int dim = cplx.dim();
  const FVector fv = cplx.f_vector();
  if (dim < 0) {
    // Only the empty face; nothing in degrees >= 0.
    out.euler_check = true;
    return out;
  }

  std::vector<std::size_t> rank(static_cast<std::size_t>(dim) + 2, 0);
  for (int k = 0; k <= dim; ++k) {
    const BoundaryMatrix m = boundary_matrix(cplx, k);
    if (m.rows * m.cols > options.max_entries) {
      throw Error(Errc::MatrixTooLarge,
                  "boundary matrix in dimension " + std::to_string(k) +
                      " has " + std::to_string(m.rows) + " x " +
                      std::to_string(m.cols) + " entries");
    }
    rank[static_cast<std::size_t>(k)] = gf2_rank(m);
    const SmithSummary snf = smith_summary(m, options.snf_max_entries);
    if (!snf.ran) {
      out.snf_complete = false;
    } else {
      if (!snf.torsion_free) out.torsion_free = false;
      if (snf.rank != rank[static_cast<std::size_t>(k)]) {
        // Differing integer and GF(2) ranks imply 2-torsion nearby.
        out.torsion_free = false;
      }
    }
  }

  out.reduced_betti.resize(static_cast<std::size_t>(dim) + 1);
  long long alternating = 0;
  for (int k = 0; k <= dim; ++k) {
    const long long faces_k = fv.by_dim(k);
    const long long betti = faces_k -
                            static_cast<long long>(rank[static_cast<std::size_t>(k)]) -
                            static_cast<long long>(rank[static_cast<std::size_t>(k) + 1]);
    out.reduced_betti[static_cast<std::size_t>(k)] = betti;
    alternating += (k % 2 == 0 ? betti : -betti);
  }
  out.euler_check = alternating == fv.reduced_euler();
  return out;
}

ShapeClass classify(const HomologyProfile& profile, const Complex& cplx,
                    const Region& region) {
  const int target = region.vertex_count() + 3 * region.hole_count() - 4;
  const int top = profile.top_nonzero();

  bool sphere = top == target && target >= 0;
  if (sphere) {
    for (int k = 0; k <= top; ++k) {
      const long long expect = k == target ? 1 : 0;
      if (profile.reduced_betti[static_cast<std::size_t>(k)] != expect) {
        sphere = false;
        break;
      }
    }
  }
  if (sphere) return ShapeClass::SphereLike;

  if (profile.all_zero() && cplx.pure() && cplx.dim() == target) {
    const BoundaryInfo boundary = boundary_faces(cplx);
    if (!boundary.free_codim1.empty()) return ShapeClass::BallLike;
  }
  return ShapeClass::Other;
}

std::string shape_class_name(ShapeClass shape) {
  switch (shape) {
    case ShapeClass::SphereLike:
      return "SphereLike";
    case ShapeClass::BallLike:
      return "BallLike";
    case ShapeClass::Other:
      return "Other";
  }
  return "Other";
}

}  // namespace noncross
