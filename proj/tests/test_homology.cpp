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

#include <cstdint>
#include <vector>

#include <doctest.h>

#include "fixtures.hpp"
#include "noncross/error.hpp"
#include "noncross/homology.hpp"

using namespace noncross;
using namespace noncross::testing;

TEST_CASE("boundary of an edge is head minus tail") {
  const Region region = make_region(convex_fixtures()[1]);  // P5
  const Complex cplx = build_complex(region);
  const BoundaryMatrix d1 = boundary_matrix(cplx, 1);
  CHECK(d1.rows == 5);
  CHECK(d1.cols == 5);
  for (const auto& column : d1.columns) {
    REQUIRE(column.size() == 2);
    CHECK(column[0].first < column[1].first);
    CHECK(column[0].second == -1);
    CHECK(column[1].second == 1);
  }
  // theta(P5) is a cycle: its edge incidence matrix has rank 4.
  CHECK(gf2_rank(d1) == 4);
}

TEST_CASE("dimension-zero boundary is the augmentation row of ones") {
  const Region region = make_region(convex_fixtures()[0]);  // P4
  const Complex cplx = build_complex(region);
  const BoundaryMatrix d0 = boundary_matrix(cplx, 0);
  CHECK(d0.rows == 1);
  CHECK(d0.cols == 2);
  for (const auto& column : d0.columns) {
    REQUIRE(column.size() == 1);
    CHECK(column[0].first == 0);
    CHECK(column[0].second == 1);
  }
}

TEST_CASE("consecutive boundary maps compose to zero") {
  for (const Fixture& fixture : all_fixtures()) {
    if (fixture.face_count > 500) continue;
    CAPTURE(fixture.name);
    const Complex cplx = build_complex(make_region(fixture));
    for (int k = 1; k <= cplx.dim(); ++k) {
      const BoundaryMatrix lower = boundary_matrix(cplx, k - 1);
      const BoundaryMatrix upper = boundary_matrix(cplx, k);
      CHECK(composition_is_zero(lower, upper));
    }
  }
}

TEST_CASE("integer and GF(2) ranks agree on the corpus") {
  for (const Fixture& fixture : all_fixtures()) {
    if (fixture.face_count > 300) continue;
    CAPTURE(fixture.name);
    const Complex cplx = build_complex(make_region(fixture));
    for (int k = 0; k <= cplx.dim(); ++k) {
      const BoundaryMatrix m = boundary_matrix(cplx, k);
      const SmithSummary smith = smith_summary(m, 1u << 24);
      REQUIRE(smith.ran);
      CHECK(smith.torsion_free);
      CHECK(smith.rank == gf2_rank(m));
    }
  }
}

TEST_CASE("smith summary detects non-unit diagonal entries") {
  // [[1, 1], [1, -1]] has determinant -2: Smith form diag(1, 2).
  BoundaryMatrix m;
  m.k = 1;
  m.rows = 2;
  m.cols = 2;
  m.columns = {{{0, 1}, {1, 1}}, {{0, 1}, {1, -1}}};
  const SmithSummary smith = smith_summary(m, 1u << 10);
  REQUIRE(smith.ran);
  CHECK(smith.rank == 2);
  CHECK_FALSE(smith.torsion_free);
  // Over GF(2) the columns coincide, so the ranks genuinely differ.
  CHECK(gf2_rank(m) == 1);
}

TEST_CASE("convex polygons carry a single top homology class") {
  for (const Fixture& fixture : convex_fixtures()) {
    CAPTURE(fixture.name);
    const Region region = make_region(fixture);
    const Complex cplx = build_complex(region);
    const HomologyProfile profile = reduced_homology(cplx);
    CHECK(profile.torsion_free);
    CHECK(profile.snf_complete);
    CHECK(profile.euler_check);
    REQUIRE(profile.reduced_betti.size() ==
            static_cast<std::size_t>(fixture.n - 3));
    for (int k = 0; k < fixture.n - 3; ++k) {
      const long long expected = (k == fixture.n - 4) ? 1 : 0;
      CHECK(profile.reduced_betti[static_cast<std::size_t>(k)] == expected);
    }
    CHECK(classify(profile, cplx, region) == ShapeClass::SphereLike);
  }
}

TEST_CASE("mouthed regions have trivial reduced homology") {
  for (const Fixture& fixture : nonconvex_fixtures()) {
    CAPTURE(fixture.name);
    const Region region = make_region(fixture);
    const Complex cplx = build_complex(region);
    const HomologyProfile profile = reduced_homology(cplx);
    CHECK(profile.all_zero());
    CHECK(profile.torsion_free);
    CHECK(profile.euler_check);
    CHECK(classify(profile, cplx, region) == ShapeClass::BallLike);
  }
  for (const Fixture& fixture : holed_fixtures()) {
    CAPTURE(fixture.name);
    const Region region = make_region(fixture);
    const Complex cplx = build_complex(region);
    const HomologyProfile profile = reduced_homology(cplx);
    CHECK(profile.all_zero());
    CHECK(profile.torsion_free);
    CHECK(profile.euler_check);
    CHECK(classify(profile, cplx, region) == ShapeClass::BallLike);
  }
}

TEST_CASE("betti profile shifts by one with each added convex vertex") {
  const auto& convex = convex_fixtures();
  for (std::size_t i = 0; i + 1 < 3; ++i) {
    const HomologyProfile small =
        reduced_homology(build_complex(make_region(convex[i])));
    const HomologyProfile large =
        reduced_homology(build_complex(make_region(convex[i + 1])));
    REQUIRE(large.reduced_betti.size() == small.reduced_betti.size() + 1);
    CHECK(large.reduced_betti[0] == 0);
    for (std::size_t k = 0; k < small.reduced_betti.size(); ++k) {
      CHECK(large.reduced_betti[k + 1] == small.reduced_betti[k]);
    }
  }
}

TEST_CASE("hard cap raises MatrixTooLarge") {
  const Complex cplx = build_complex(make_region(convex_fixtures()[2]));
  HomologyOptions options;
  options.max_entries = 1;
  try {
    reduced_homology(cplx, options);
    FAIL("expected MatrixTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MatrixTooLarge);
  }
}

TEST_CASE("soft cap skips the integer pass and reports it") {
  const Complex cplx = build_complex(make_region(convex_fixtures()[2]));
  HomologyOptions options;
  options.snf_max_entries = 0;
  const HomologyProfile profile = reduced_homology(cplx, options);
  CHECK_FALSE(profile.snf_complete);
  CHECK(profile.euler_check);
  CHECK(profile.top_nonzero() == 2);
}

TEST_CASE("classification falls back to Other off the certified shapes") {
  // The 4-cycle complex (two crossing pairs, no other crossings) has the
  // homology of a circle but the wrong dimension bookkeeping for a square.
  const Region region = make_region(convex_fixtures()[0]);  // P4, dim 0
  const Complex square = build_complex(region);
  HomologyProfile fake;
  fake.reduced_betti = {0};
  fake.torsion_free = true;
  fake.euler_check = false;
  CHECK(classify(fake, square, region) == ShapeClass::Other);
}

TEST_CASE("the void complex has no homology in degrees zero and up") {
  // The link of either diagonal of a square is empty: only the empty face.
  const Complex square = build_complex(make_region(convex_fixtures()[0]));
  const Complex empty = link(square, 0);
  REQUIRE(empty.dim() == -1);
  const HomologyProfile profile = reduced_homology(empty);
  CHECK(profile.reduced_betti.empty());
  CHECK(profile.all_zero());
  CHECK(profile.top_nonzero() == -1);
  CHECK(profile.euler_check);
  CHECK(profile.torsion_free);
}
