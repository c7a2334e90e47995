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

// Region file: {"outer": [[x,y], ...], "holes": [[[x,y], ...], ...]} with
// integer coordinates; "holes" may be absent. Rings are normalized on load.
Region parse_region_text(const std::string& text);
Region parse_region_file(const std::string& path);

// Stable two-key serialization ("outer", then "holes" when present).
std::string serialize_region(const Region& region);
std::string serialize_rings(const std::vector<std::vector<Point>>& rings);

}  // namespace noncross
