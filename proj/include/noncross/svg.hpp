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

#include "noncross/region.hpp"

namespace noncross {

struct SvgOptions {
  bool show_diagonals = false;
  // The 1-skeleton of the diagonal complex is drawn as an inset graph only
  // when the region has at most this many diagonals.
  int skeleton_limit = 12;
};

// Static SVG 1.1 figure: the region boundary (holes as cut-outs), vertex
// labels, optionally the diagonals, and for small inputs the complex
// 1-skeleton. Deterministic for a fixed input.
std::string render_svg(const Region& region, const SvgOptions& options = {});

}  // namespace noncross
