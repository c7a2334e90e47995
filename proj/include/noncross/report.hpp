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
#include <string>

#include "noncross/complex.hpp"
#include "noncross/region.hpp"

namespace noncross {

struct ReportOptions {
  std::size_t max_faces = kDefaultMaxFaces;
};

// Full verification report. The serialized form is deterministic for a fixed
// input (stable key order, no timestamps or timings), so repeated runs are
// byte-identical. all_claims_pass aggregates every structural claim checked:
// purity in the expected dimension, facet tilings, the pairing conditions and
// collapse when the region has a mouth, the Betti profile, torsion freeness,
// the classification, and (for holed regions) the boundary-closure property.
struct ReportResult {
  std::string json;
  bool all_claims_pass = false;
};

ReportResult build_report(const Region& region, const ReportOptions& options = {});

}  // namespace noncross
