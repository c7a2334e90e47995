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

#include "noncross/report.hpp"

#include <json.hpp>

#include "noncross/homology.hpp"
#include "noncross/morse.hpp"

namespace noncross {

namespace {

using Json = nlohmann::ordered_json;

Json label_json(const Diagonal& d) { return Json::array({d.u, d.v}); }

}  // namespace

ReportResult build_report(const Region& region, const ReportOptions& options) {
  Json doc;
  Json claims;
  const int n = region.vertex_count();
  const int h = region.hole_count();
  const int expected_dim = n + 3 * h - 4;

  {
    Json summary;
    summary["n"] = n;
    summary["h"] = h;
    summary["convex"] = region.convex();
    summary["ears"] = region.ears();
    summary["mouths"] = region.mouths();
    doc["region"] = std::move(summary);
  }

  const Complex cplx = build_complex(region, {options.max_faces, false});
  {
    Json summary;
    summary["diagonal_count"] = cplx.vertex_count();
    summary["dim"] = cplx.dim();
    summary["f_vector"] = cplx.f_vector().by_card();
    summary["face_count"] = static_cast<std::int64_t>(cplx.face_count());
    summary["facet_count"] = static_cast<std::int64_t>(cplx.facet_ids().size());
    summary["pure"] = cplx.pure();
    doc["complex"] = std::move(summary);
  }
  claims["pure_of_expected_dimension"] =
      cplx.pure() && cplx.dim() == expected_dim;

  {
    bool all_tile = true;
    for (const std::uint32_t fid : cplx.facet_ids()) {
      if (!triangulation_is_tiling(region, cplx, cplx.faces()[fid])) {
        all_tile = false;
        break;
      }
    }
    claims["facets_are_tilings"] = all_tile;
  }

  const bool mouthed = !region.mouths().empty();
  if (mouthed) {
    const int mouth = region.select_mouth();
    const DiagonalOrder order = DiagonalOrder::mouth_rooted(cplx, mouth);
    const PairingReport pairing = verify_pairing_conditions(cplx, order);
    Json summary;
    summary["mouth"] = mouth;
    Json conditions = Json::array();
    for (const auto& c : pairing.conditions) {
      Json entry;
      entry["checked"] = c.checked;
      entry["failed"] = c.failed;
      conditions.push_back(std::move(entry));
    }
    summary["conditions"] = std::move(conditions);
    summary["undefined"] = pairing.undefined;
    summary["conditions_pass"] = pairing.all_pass();
    claims["pairing_conditions"] = pairing.all_pass();

    const MorseMatching matching = build_matching(cplx, order);
    summary["pair_count"] = static_cast<std::int64_t>(matching.pairs.size());
    summary["critical_count"] =
        static_cast<std::int64_t>(matching.critical.size());
    claims["perfect_matching"] = matching.critical.empty();

    const bool acyclic = verify_acyclicity(cplx, matching);
    summary["acyclic"] = acyclic;
    claims["acyclic_matching"] = acyclic;

    const auto log = collapse(cplx, matching);
    const Face survivor =
        cplx.faces()[static_cast<std::size_t>(matching.partner[0])];
    summary["collapse_length"] = static_cast<std::int64_t>(log.size());
    summary["surviving_vertex"] = label_json(cplx.label(survivor.first()));
    claims["collapse_to_point"] =
        log.size() == matching.pairs.size() - 1;

    claims["mouth_incidence"] = mouth_incidence_check(cplx, mouth);
    doc["morse"] = std::move(summary);
  } else {
    doc["morse"] = nullptr;
  }

  const HomologyProfile profile = reduced_homology(cplx);
  const ShapeClass shape = classify(profile, cplx, region);
  {
    Json summary;
    summary["reduced_betti"] = profile.reduced_betti;
    summary["torsion_free"] = profile.torsion_free;
    summary["snf_complete"] = profile.snf_complete;
    summary["euler_check"] = profile.euler_check;
    summary["classification"] = shape_class_name(shape);
    summary["classification_note"] =
        "homology-level proxy; does not certify homeomorphism";
    doc["homology"] = std::move(summary);
  }
  claims["euler_check"] = profile.euler_check;
  claims["torsion_free"] = profile.torsion_free;

  {
    const BoundaryInfo boundary = boundary_faces(cplx);
    Json summary;
    summary["free_codim1_count"] =
        static_cast<std::int64_t>(boundary.free_codim1.size());
    summary["closure_count"] = static_cast<std::int64_t>(boundary.closure.size());
    summary["all_vertices_on_boundary"] = boundary.all_vertices_on_boundary;
    doc["boundary"] = std::move(summary);
    if (h > 0) {
      claims["vertices_on_boundary"] = boundary.all_vertices_on_boundary;
    }
  }

  if (mouthed) {
    bool expected = true;
    for (const long long b : profile.reduced_betti) expected &= b == 0;
    claims["homology_profile"] = expected;
    claims["classification"] = shape == ShapeClass::BallLike;
  } else {
    bool expected = !profile.reduced_betti.empty();
    for (int k = 0; k < static_cast<int>(profile.reduced_betti.size()); ++k) {
      const long long want = k == expected_dim ? 1 : 0;
      expected &= profile.reduced_betti[static_cast<std::size_t>(k)] == want;
    }
    claims["homology_profile"] = expected;
    claims["classification"] = shape == ShapeClass::SphereLike;
  }

  bool all_pass = true;
  for (const auto& [key, value] : claims.items()) {
    (void)key;
    all_pass &= value.get<bool>();
  }
  doc["claims"] = std::move(claims);
  doc["all_claims_pass"] = all_pass;
  // Wall-clock timings go to stderr; the file stays byte-identical per input.
  doc["timings"] = "emitted on stderr";

  ReportResult out;
  out.all_claims_pass = all_pass;
  out.json = doc.dump(2) + "\n";
  return out;
}

}  // namespace noncross
