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

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "noncross/complex.hpp"
#include "noncross/face.hpp"

namespace noncross {

// Linear order on the complex vertices rooted at a mouth vertex x of the
// region: the diagonals incident to x (the set D_x, listed as [x,w_1] through
// [x,w_k] with far endpoints ascending) occupy the final positions; all other
// diagonals precede them in label order.
struct DiagonalOrder {
  int mouth = -1;
  std::vector<int> order;  // position -> complex vertex
  std::vector<int> rank;   // complex vertex -> position
  std::vector<int> dx;     // D_x, ascending far endpoint; dx.back() is [x,w_k]
  Face dx_mask;

  static DiagonalOrder mouth_rooted(const Complex& cplx, int mouth_vertex);

  // Same D_x bookkeeping but an arbitrary vertex permutation; lets tests
  // exercise orders that break the pairing conditions.
  static DiagonalOrder from_permutation(const Complex& cplx, int mouth_vertex,
                                        std::vector<int> permutation);
};

// f(σ): the element [x,w_j] of D_x with j maximal such that [x,w_j] crosses
// no member of σ \ D_x. Depends only on σ \ D_x. Throws NoCandidate when
// every element of D_x is blocked.
int pairing_function(const Complex& cplx, const DiagonalOrder& order,
                     const Face& sigma);

// Exhaustive check of the four pairing conditions over the face poset Q
// (empty face included), with Q_f = {σ : f(σ) ∉ σ} and σ⁺ = σ ∪ {f(σ)}:
//   1. σ ∈ Q_f implies σ⁺ ∈ Q.
//   2. σ ∈ Q_f implies f(σ⁺) = f(σ).
//   3. τ ∉ Q_f and τ⁻ = τ \ {f(τ)} ∈ Q imply f(τ⁻) = f(τ).
//   4. y ∈ σ ∈ Q_f and σ⁺ \ {y} ∈ Q imply f(σ) precedes-or-equals
//      f(σ⁺ \ {y}) in the diagonal order.
struct PairingReport {
  struct Condition {
    long long checked = 0;
    long long failed = 0;
    // First failing instance: the face σ (or τ) and the subface/superface
    // involved, where applicable.
    std::optional<std::pair<Face, Face>> first_failure;
  };
  std::array<Condition, 4> conditions;
  long long undefined = 0;  // faces where the pairing function has no candidate
  std::optional<Face> first_undefined;

  bool all_pass() const {
    if (undefined != 0) return false;
    for (const auto& c : conditions) {
      if (c.failed != 0) return false;
    }
    return true;
  }
};

PairingReport verify_pairing_conditions(const Complex& cplx,
                                        const DiagonalOrder& order);

// The induced matching on Q: every σ ∈ Q_f pairs with σ⁺. For conforming
// inputs this is a perfect matching (critical empty).
struct MorseMatching {
  std::vector<int> f_value;               // per face id
  std::vector<std::int64_t> partner;      // per face id, -1 when unmatched
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // (σ, σ⁺) ids
  std::vector<std::uint32_t> critical;    // unmatched face ids
};

MorseMatching build_matching(const Complex& cplx, const DiagonalOrder& order);

// No directed cycle in the modified Hasse diagram: cover edges run upward
// σ -> σ⁺ for matched pairs and downward τ -> τ\{y} otherwise.
bool verify_acyclicity(const Complex& cplx, const MorseMatching& matching);

struct CollapseStep {
  Face free_face;
  Face coface;
};

// Executes the collapse induced by the matching: every matched pair except
// (∅, {f(∅)}) is removed as an elementary collapse, scheduled by decreasing
// coface dimension with canonical order breaking ties, deferring pairs that
// are not yet free. Ends with exactly the two faces ∅ and {f(∅)} remaining
// and returns the ordered log. Throws StuckCollapse when no remaining pair is
// free, NotAMatching when the matching is not a perfect matching on Q.
std::vector<CollapseStep> collapse(const Complex& cplx,
                                   const MorseMatching& matching);

// Replays a collapse log by brute force: each step's free face must at that
// moment lie in exactly one remaining proper superset, its recorded coface.
bool replay_collapse(const Complex& cplx,
                     const std::vector<CollapseStep>& log);

// Every facet contains a diagonal incident to the given region vertex.
bool mouth_incidence_check(const Complex& cplx, int mouth_vertex);

}  // namespace noncross
