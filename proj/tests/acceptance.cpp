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

// End-to-end acceptance checks. Each criterion prints exactly one PASS or
// FAIL line; the process exits nonzero when any criterion fails.

#include <cstdint>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "noncross/complex.hpp"
#include "noncross/cut.hpp"
#include "noncross/homology.hpp"
#include "noncross/morse.hpp"
#include "noncross/random_polygon.hpp"
#include "noncross/region.hpp"
#include "oracle.hpp"

namespace {

using namespace noncross;
using namespace noncross::testing;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& message) {
    if (pass) detail = message;  // keep the first failure
    pass = false;
  }
};

std::vector<Region> random_corpus() {
  std::vector<Region> out;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    RandomPolygonOptions options;
    options.n = 5 + static_cast<int>(seed % 4);  // 5 through 8
    options.seed = seed;
    options.require_nonconvex = true;
    out.push_back(random_simple_polygon(options));
  }
  return out;
}

// Pairing conditions, perfect matching, acyclicity, collapse to a single
// surviving vertex, replayed by brute force.
void check_collapse_machinery(const Region& region, const std::string& tag,
                              Outcome& outcome) {
  const Complex cplx = build_complex(region);
  if (region.mouths().empty()) {
    outcome.fail(tag + ": no mouth");
    return;
  }
  const int mouth = region.select_mouth();
  const DiagonalOrder order = DiagonalOrder::mouth_rooted(cplx, mouth);
  const PairingReport report = verify_pairing_conditions(cplx, order);
  if (!report.all_pass()) {
    outcome.fail(tag + ": pairing conditions fail");
    return;
  }
  const MorseMatching matching = build_matching(cplx, order);
  if (!matching.critical.empty() ||
      matching.pairs.size() * 2 != cplx.face_count()) {
    outcome.fail(tag + ": matching not perfect");
    return;
  }
  if (!verify_acyclicity(cplx, matching)) {
    outcome.fail(tag + ": matching has a directed cycle");
    return;
  }
  const auto log = collapse(cplx, matching);
  if (log.size() != matching.pairs.size() - 1) {
    outcome.fail(tag + ": collapse stopped early");
    return;
  }
  if (!replay_collapse(cplx, log)) {
    outcome.fail(tag + ": collapse log fails replay");
    return;
  }
  const Face root =
      cplx.faces()[static_cast<std::size_t>(matching.partner[0])];
  if (root.count() != 1 ||
      root.first() != pairing_function(cplx, order, Face{})) {
    outcome.fail(tag + ": wrong surviving vertex");
  }
}

void check_trivial_homology(const Region& region, const std::string& tag,
                            const HomologyOptions& options, Outcome& outcome) {
  const Complex cplx = build_complex(region);
  const HomologyProfile profile = reduced_homology(cplx, options);
  if (!profile.all_zero()) outcome.fail(tag + ": nonzero reduced homology");
  if (!profile.torsion_free) outcome.fail(tag + ": torsion detected");
  if (!profile.euler_check) outcome.fail(tag + ": euler mismatch");
}

Outcome criterion_convex_spheres() {
  Outcome outcome;
  for (const Fixture& fixture : convex_fixtures()) {
    const Region region = make_region(fixture);
    const Complex cplx = build_complex(region);
    if (static_cast<long long>(cplx.facet_ids().size()) !=
        catalan(fixture.n - 2)) {
      outcome.fail(fixture.name + ": facet count is not Catalan");
    }
    const HomologyProfile profile = reduced_homology(cplx);
    if (!profile.torsion_free || !profile.snf_complete ||
        !profile.euler_check) {
      outcome.fail(fixture.name + ": homology bookkeeping failed");
    }
    for (int k = 0; k <= cplx.dim(); ++k) {
      const long long expected = (k == fixture.n - 4) ? 1 : 0;
      if (profile.reduced_betti[static_cast<std::size_t>(k)] != expected) {
        outcome.fail(fixture.name + ": betti profile is not a sphere");
      }
    }
    if (classify(profile, cplx, region) != ShapeClass::SphereLike) {
      outcome.fail(fixture.name + ": not classified SphereLike");
    }
  }
  return outcome;
}

Outcome criterion_mouthed_collapse(const std::vector<Region>& corpus) {
  Outcome outcome;
  for (const Fixture& fixture : nonconvex_fixtures()) {
    const Region region = make_region(fixture);
    check_collapse_machinery(region, fixture.name, outcome);
    check_trivial_homology(region, fixture.name, HomologyOptions{}, outcome);
  }
  HomologyOptions fast;  // GF(2) profile only for the mass sample
  fast.snf_max_entries = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::string tag = "random#" + std::to_string(i + 1);
    check_collapse_machinery(corpus[i], tag, outcome);
    check_trivial_homology(corpus[i], tag, fast, outcome);
  }
  return outcome;
}

Outcome criterion_holed_regions() {
  Outcome outcome;
  for (const Fixture& fixture : holed_fixtures()) {
    const Region region = make_region(fixture);
    const Complex cplx = build_complex(region);
    const int expected_dim =
        region.vertex_count() + 3 * region.hole_count() - 4;
    if (!cplx.pure() || cplx.dim() != expected_dim) {
      outcome.fail(fixture.name + ": not pure of the expected dimension");
    }
    for (const std::uint32_t facet : cplx.facet_ids()) {
      if (cplx.faces()[facet].count() != expected_dim + 1) {
        outcome.fail(fixture.name + ": facet of the wrong size");
        break;
      }
    }
    check_collapse_machinery(region, fixture.name, outcome);
    check_trivial_homology(region, fixture.name, HomologyOptions{}, outcome);
    const BoundaryInfo boundary = boundary_faces(cplx);
    if (!boundary.all_vertices_on_boundary) {
      outcome.fail(fixture.name + ": vertex off the boundary closure");
    }
    if (boundary.free_codim1.size() !=
        static_cast<std::size_t>(expected_free_codim1(fixture.name))) {
      outcome.fail(fixture.name + ": free face count drifted");
    }
  }
  return outcome;
}

Outcome criterion_ear_mouth_census(const std::vector<Region>& corpus) {
  Outcome outcome;
  const auto censor = [&outcome](const Region& region, const std::string& tag,
                                 bool expect_convex) {
    if (region.ears().size() < 2) outcome.fail(tag + ": fewer than two ears");
    if (region.convex() != expect_convex) {
      outcome.fail(tag + ": convexity misread");
    }
    if (expect_convex != region.mouths().empty()) {
      outcome.fail(tag + ": mouth census contradicts convexity");
    }
  };
  for (const Fixture& fixture : all_fixtures()) {
    const Region region = make_region(fixture);
    censor(region, fixture.name, fixture.mouths.empty());
    // The frozen census itself (outer-ring ears; hole-ring ears are mouths).
    if (region.ears() != fixture.ears) {
      outcome.fail(fixture.name + ": ear set drifted");
    }
    if (region.mouths() != fixture.mouths) {
      outcome.fail(fixture.name + ": mouth set drifted");
    }
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    censor(corpus[i], "random#" + std::to_string(i + 1), false);
  }
  return outcome;
}

Outcome criterion_mouth_incidence() {
  Outcome outcome;
  for (const Fixture* fixture : [] {
         std::vector<const Fixture*> mouthed;
         for (const Fixture& f : nonconvex_fixtures()) mouthed.push_back(&f);
         for (const Fixture& f : holed_fixtures()) mouthed.push_back(&f);
         return mouthed;
       }()) {
    const Region region = make_region(*fixture);
    const Complex cplx = build_complex(region);
    for (const int mouth : region.mouths()) {
      if (!mouth_incidence_check(cplx, mouth)) {
        outcome.fail(fixture->name + ": facet avoids mouth " +
                     std::to_string(mouth));
      }
    }
  }
  return outcome;
}

Outcome criterion_link_factorization() {
  Outcome outcome;
  for (std::size_t idx = 2; idx <= 4; ++idx) {  // convex 6, 7, 8
    const Fixture& fixture = convex_fixtures()[idx];
    const Region region = make_region(fixture);
    const Complex cplx = build_complex(region);
    for (int v = 0; v < cplx.vertex_count(); ++v) {
      const Diagonal d = cplx.label(v);
      const Complex lk = link(cplx, v);
      const CutResult cut = cut_along_diagonal(region, d);
      if (!cut.separating || cut.pieces.size() != 2) {
        outcome.fail(fixture.name + ": polygon cut did not separate");
        continue;
      }
      const Complex left = piece_complex(region, d, cut.pieces[0]);
      const Complex right = piece_complex(region, d, cut.pieces[1]);
      const FVector joined =
          FVector::convolve(left.f_vector(), right.f_vector());
      if (!(lk.f_vector() == joined)) {
        outcome.fail(fixture.name + ": link does not factor through the cut");
      }
      const HomologyProfile profile = reduced_homology(lk);
      for (int k = 0; k <= lk.dim(); ++k) {
        const long long expected = (k == fixture.n - 5) ? 1 : 0;
        if (profile.reduced_betti[static_cast<std::size_t>(k)] != expected) {
          outcome.fail(fixture.name + ": link homology is not a sphere");
        }
      }
    }
  }
  return outcome;
}

Outcome criterion_star_deletion_recursion() {
  Outcome outcome;
  for (std::size_t idx = 1; idx <= 3; ++idx) {  // convex 5, 6, 7
    const Fixture& fixture = convex_fixtures()[idx];
    const Region region = make_region(fixture);
    const Complex cplx = build_complex(region);
    const Diagonal chord{1, fixture.n - 1};
    int v = -1;
    for (int i = 0; i < cplx.vertex_count(); ++i) {
      if (cplx.label(i) == chord) v = i;
    }
    if (v < 0) {
      outcome.fail(fixture.name + ": short chord missing");
      continue;
    }
    const Complex lk = link(cplx, v);
    const Complex del = deletion(cplx, v);
    if (lk.face_count() + del.face_count() != cplx.face_count()) {
      outcome.fail(fixture.name + ": star and deletion do not partition");
    }
    // Cutting off the triangle (n-1, 0, 1) leaves one size down.
    const Complex smaller =
        build_complex(make_region(convex_fixtures()[idx - 1]));
    if (!(lk.f_vector() == smaller.f_vector())) {
      outcome.fail(fixture.name + ": link is not the smaller polygon");
    }
    const HomologyProfile big = reduced_homology(cplx);
    const HomologyProfile small = reduced_homology(smaller);
    if (big.reduced_betti.size() != small.reduced_betti.size() + 1 ||
        big.reduced_betti[0] != 0) {
      outcome.fail(fixture.name + ": betti profile did not shift");
      continue;
    }
    for (std::size_t k = 0; k < small.reduced_betti.size(); ++k) {
      if (big.reduced_betti[k + 1] != small.reduced_betti[k]) {
        outcome.fail(fixture.name + ": betti profile did not shift");
      }
    }
  }
  return outcome;
}

Outcome criterion_independent_enumeration() {
  Outcome outcome;
  for (const Fixture& fixture : all_fixtures()) {
    const Region region = make_region(fixture);
    const Complex cplx = build_complex(region);
    const std::vector<Diagonal> diags = region.diagonals();
    if (diags != cplx.labels()) {
      outcome.fail(fixture.name + ": label order drifted");
      continue;
    }
    const auto table = crossing_table(region, diags);
    const std::vector<Face> expected = enumerate_cliques(table);
    if (expected.size() != cplx.face_count()) {
      outcome.fail(fixture.name + ": face count disagrees with clique search");
      continue;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (!(expected[i] == cplx.faces()[i])) {
        outcome.fail(fixture.name + ": face list disagrees with clique search");
        break;
      }
    }
  }
  return outcome;
}

Outcome criterion_facet_tilings() {
  Outcome outcome;
  for (const Fixture& fixture : all_fixtures()) {
    const Region region = make_region(fixture);
    const Complex cplx = build_complex(region);
    const int expected_triangles =
        region.vertex_count() + 2 * region.hole_count() - 2;
    for (const std::uint32_t facet : cplx.facet_ids()) {
      TilingStats stats;
      if (!triangulation_is_tiling(region, cplx, cplx.faces()[facet],
                                   &stats)) {
        outcome.fail(fixture.name + ": facet fails the tiling check");
        break;
      }
      if (stats.triangle_count != expected_triangles ||
          stats.doubled_area_sum != region.doubled_area()) {
        outcome.fail(fixture.name + ": tiling census drifted");
        break;
      }
    }
  }
  return outcome;
}

int report_line(int number, const std::string& description,
                const Outcome& outcome) {
  std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << number
            << ": " << description;
  if (!outcome.pass && !outcome.detail.empty()) {
    std::cout << " [" << outcome.detail << "]";
  }
  std::cout << "\n";
  return outcome.pass ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;
  try {
    const std::vector<Region> corpus = random_corpus();
    failures += report_line(
        1, "convex polygons: Catalan facet counts and sphere homology",
        criterion_convex_spheres());
    failures += report_line(
        2,
        "mouthed polygons (fixtures plus 200 random): conditions, perfect "
        "acyclic matching, collapse to a point, trivial homology",
        criterion_mouthed_collapse(corpus));
    failures += report_line(
        3, "holed regions: purity, collapse, homology, boundary coverage",
        criterion_holed_regions());
    failures += report_line(
        4, "ear and mouth census matches convexity on every input",
        criterion_ear_mouth_census(corpus));
    failures +=
        report_line(5, "every facet meets the chosen mouth's diagonal fan",
                    criterion_mouth_incidence());
    failures += report_line(
        6, "links of diagonals factor as joins over the cut pieces",
        criterion_link_factorization());
    failures += report_line(
        7, "star and deletion partition the complex; links recurse",
        criterion_star_deletion_recursion());
    failures += report_line(
        8, "face enumeration matches an independent clique search",
        criterion_independent_enumeration());
    failures += report_line(
        9, "every facet tiles the region exactly",
        criterion_facet_tilings());
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance: unexpected exception [" << e.what()
              << "]\n";
    return 1;
  }
  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 9 criteria passed\n";
  return 0;
}
