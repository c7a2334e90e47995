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

#include <algorithm>
#include <functional>
#include <vector>

#include "noncross/complex.hpp"
#include "noncross/face.hpp"
#include "noncross/region.hpp"

namespace noncross::testing {

// Plain pairwise crossing table from the region geometry.
inline std::vector<std::vector<bool>> crossing_table(
    const Region& region, const std::vector<Diagonal>& diags) {
  const std::size_t d = diags.size();
  std::vector<std::vector<bool>> table(d, std::vector<bool>(d, false));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      table[a][b] = table[b][a] = crossing(region, diags[a], diags[b]);
    }
  }
  return table;
}

// Every independent set of the crossing graph, found by plain list-based
// subset extension (no bitmask interplay with the library's construction).
inline std::vector<Face> enumerate_cliques(
    const std::vector<std::vector<bool>>& table) {
  const int d = static_cast<int>(table.size());
  std::vector<Face> out;
  std::vector<int> current;
  const auto emit = [&]() {
    Face face;
    for (const int v : current) face.set(v);
    out.push_back(face);
  };
  const std::function<void(int)> extend = [&](int start) {
    emit();
    for (int v = start; v < d; ++v) {
      bool ok = true;
      for (const int u : current) ok = ok && !table[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (!ok) continue;
      current.push_back(v);
      extend(v + 1);
      current.pop_back();
    }
  };
  extend(0);
  std::sort(out.begin(), out.end(), canonical_face_less);
  return out;
}

// Facet count by scanning every size-m index combination for pairwise
// compatibility.
inline long long count_facets_by_combinations(
    const std::vector<std::vector<bool>>& table, int m) {
  const int d = static_cast<int>(table.size());
  if (m < 0 || m > d) return 0;
  std::vector<int> pick(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) pick[static_cast<std::size_t>(i)] = i;
  long long count = 0;
  while (true) {
    bool ok = true;
    for (int a = 0; a < m && ok; ++a) {
      for (int b = a + 1; b < m; ++b) {
        if (table[static_cast<std::size_t>(pick[static_cast<std::size_t>(a)])]
                 [static_cast<std::size_t>(pick[static_cast<std::size_t>(b)])]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++count;
    int i = m - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == d - m + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return count;
}

inline long long catalan(int m) {
  // C_m = binom(2m, m) / (m + 1), built multiplicatively.
  long long value = 1;
  for (int i = 0; i < m; ++i) {
    value = value * 2 * (2 * i + 1) / (i + 2);
  }
  return value;
}

}  // namespace noncross::testing
