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

#include "noncross/region.hpp"

namespace noncross {

struct RandomPolygonOptions {
  int n = 6;
  std::uint64_t seed = 0;
  Coord grid = 16;  // coordinates sampled from [0, grid)^2
  // Keep resampling until the polygon has a mouth (equivalently, a reflex
  // vertex).
  bool require_nonconvex = false;
  int max_attempts = 4096;
};

// Seeded, reproducible simple polygon on a small integer grid: sample n
// distinct points, take a random cyclic order, then repair edge crossings by
// 2-opt reversals. A reversal is applied only when it strictly shortens the
// tour under exact length comparison, so the repair loop terminates; attempts
// that get stuck or produce a collinear (straight) vertex are resampled,
// keeping every emitted polygon strictly convex or strictly mouthed.
Region random_simple_polygon(const RandomPolygonOptions& options);

}  // namespace noncross
