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

#include <string>
#include <vector>

#include "noncross/region.hpp"

namespace noncross::testing {

// Fixed corpus with independently derived expected values (diagonal, face,
// and facet counts; ear and mouth sets). A count of -1 means "not frozen".
struct Fixture {
  std::string name;
  std::vector<std::vector<Point>> rings;
  int n = 0;
  int h = 0;
  std::vector<int> ears;    // outer-ring ears, ascending
  std::vector<int> mouths;  // region mouths, ascending; empty iff convex
  long long diagonal_count = -1;
  long long face_count = -1;   // includes the empty face
  long long facet_count = -1;
};

inline const std::vector<Fixture>& convex_fixtures() {
  static const std::vector<Fixture> fixtures = {
      {"convex4", {{{0, 0}, {2, 0}, {2, 2}, {0, 2}}}, 4, 0,
       {0, 1, 2, 3}, {}, 2, 3, 2},
      {"convex5", {{{0, 0}, {2, 0}, {3, 2}, {2, 3}, {0, 2}}}, 5, 0,
       {0, 1, 2, 3, 4}, {}, 5, 11, 5},
      {"convex6", {{{0, 0}, {2, 0}, {3, 1}, {2, 2}, {0, 2}, {-1, 1}}}, 6, 0,
       {0, 1, 2, 3, 4, 5}, {}, 9, 45, 14},
      {"convex7",
       {{{0, 0}, {2, 0}, {3, 1}, {3, 2}, {2, 3}, {0, 3}, {-1, 1}}}, 7, 0,
       {0, 1, 2, 3, 4, 5, 6}, {}, 14, 197, 42},
      {"convex8",
       {{{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 3}, {0, 3}, {-1, 2}, {-1, 1}}},
       8, 0, {0, 1, 2, 3, 4, 5, 6, 7}, {}, 20, 903, 132},
      {"convex9",
       {{{0, 0}, {1, 0}, {3, 1}, {4, 2}, {4, 3}, {3, 4}, {0, 4}, {-1, 3},
         {-1, 1}}},
       9, 0, {0, 1, 2, 3, 4, 5, 6, 7, 8}, {}, 27, 4279, 429},
  };
  return fixtures;
}

inline const std::vector<Fixture>& nonconvex_fixtures() {
  static const std::vector<Fixture> fixtures = {
      {"dart", {{{0, 0}, {2, 1}, {4, 0}, {2, 3}}}, 4, 0,
       {0, 2}, {1, 3}, 1, 2, 1},
      {"pent1", {{{0, 0}, {4, 0}, {4, 3}, {2, 1}, {0, 3}}}, 5, 0,
       {2, 4}, {3}, 2, 4, 1},
      {"pent2", {{{0, 0}, {6, 0}, {2, 2}, {6, 4}, {0, 4}}}, 5, 0,
       {1, 3}, {2}, 2, 4, 1},
      {"hex_notch", {{{0, 0}, {2, 0}, {3, 1}, {2, 2}, {0, 2}, {1, 1}}}, 6, 0,
       {0, 1, 2, 3, 4}, {5}, 6, 22, 5},
      {"hex2", {{{0, 0}, {6, 0}, {6, 6}, {3, 3}, {0, 6}, {2, 2}}}, 6, 0,
       {0, 2, 4}, {3, 5}, 3, 8, 1},
      {"hex3", {{{0, 0}, {8, 0}, {7, 3}, {8, 6}, {4, 2}, {0, 6}}}, 6, 0,
       {1, 3, 5}, {2, 4}, 4, 12, 2},
      {"hept1", {{{0, 0}, {8, 0}, {8, 6}, {5, 2}, {3, 5}, {1, 2}, {0, 6}}},
       7, 0, {2, 4, 6}, {3, 5}, 6, 32, 3},
      {"hept2", {{{0, 0}, {4, 2}, {8, 0}, {8, 8}, {6, 3}, {2, 6}, {0, 8}}},
       7, 0, {0, 3, 6}, {1, 4, 5}, 6, 36, 4},
      {"oct1",
       {{{0, 0}, {3, 2}, {6, 0}, {8, 3}, {6, 6}, {4, 4}, {2, 6}, {0, 3}}},
       8, 0, {0, 2, 3, 4, 6, 7}, {1, 5}, 13, 294, 30},
      {"oct2",
       {{{0, 0}, {8, 0}, {6, 2}, {8, 4}, {6, 6}, {8, 8}, {0, 8}, {2, 4}}},
       8, 0, {0, 1, 3, 5, 6}, {2, 4, 7}, 12, 236, 21},
      {"non1",
       {{{0, 0}, {10, 0}, {8, 2}, {10, 4}, {7, 5}, {9, 8}, {5, 6}, {0, 8},
         {3, 4}}},
       9, 0, {0, 1, 3, 5, 7}, {2, 4, 6, 8}, 17, 752, 36},
  };
  return fixtures;
}

inline const std::vector<Fixture>& holed_fixtures() {
  static const std::vector<Fixture> fixtures = {
      {"tri_in_tri",
       {{{0, 0}, {12, 0}, {0, 12}}, {{3, 3}, {3, 5}, {5, 3}}}, 6, 1,
       {0, 1, 2}, {3, 4, 5}, 9, 216, 8},
      {"sq_in_sq",
       {{{0, 0}, {10, 0}, {10, 10}, {0, 10}}, {{4, 4}, {4, 6}, {6, 6}, {6, 4}}},
       8, 1, {0, 1, 2, 3}, {4, 5, 6, 7}, 12, 1296, 16},
      {"pent_tri_hole",
       {{{0, 0}, {8, 0}, {12, 8}, {6, 12}, {0, 8}}, {{5, 4}, {5, 6}, {7, 5}}},
       8, 1, {0, 1, 2, 3, 4}, {5, 6, 7}, 16, 2624, 34},
  };
  return fixtures;
}

inline std::vector<Fixture> all_fixtures() {
  std::vector<Fixture> out = convex_fixtures();
  const auto& nonconvex = nonconvex_fixtures();
  const auto& holed = holed_fixtures();
  out.insert(out.end(), nonconvex.begin(), nonconvex.end());
  out.insert(out.end(), holed.begin(), holed.end());
  return out;
}

// Expected boundary sizes of the holed fixtures, by name.
inline long long expected_free_codim1(const std::string& name) {
  if (name == "tri_in_tri") return 24;
  if (name == "sq_in_sq") return 64;
  if (name == "pent_tri_hole") return 140;
  return -1;
}

// Frozen diagonal lists for the holed fixtures.
inline std::vector<Diagonal> expected_diagonals(const std::string& name) {
  if (name == "tri_in_tri") {
    return {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
            {1, 5}, {2, 3}, {2, 4}, {2, 5}};
  }
  if (name == "sq_in_sq") {
    return {{0, 4}, {0, 5}, {0, 7}, {1, 4}, {1, 6}, {1, 7},
            {2, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 5}, {3, 6}};
  }
  if (name == "pent_tri_hole") {
    return {{0, 2}, {0, 3}, {0, 5}, {0, 6}, {0, 7}, {1, 3}, {1, 4}, {1, 5},
            {1, 7}, {2, 4}, {2, 6}, {2, 7}, {3, 6}, {3, 7}, {4, 5}, {4, 6}};
  }
  return {};
}

inline Region make_region(const Fixture& fixture) {
  return Region::validate(fixture.rings);
}

}  // namespace noncross::testing
