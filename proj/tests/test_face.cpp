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

#include <algorithm>
#include <vector>

#include <doctest.h>

#include "noncross/error.hpp"
#include "noncross/face.hpp"

using namespace noncross;

TEST_CASE("face set/test/count over both words") {
  Face f;
  CHECK(f.empty());
  CHECK(f.count() == 0);
  f.set(0);
  f.set(63);
  f.set(64);
  f.set(127);
  CHECK(f.count() == 4);
  CHECK(f.test(0));
  CHECK(f.test(63));
  CHECK(f.test(64));
  CHECK(f.test(127));
  CHECK_FALSE(f.test(1));
  CHECK_FALSE(f.test(65));
  f.reset(64);
  CHECK(f.count() == 3);
  CHECK_FALSE(f.test(64));
}

TEST_CASE("face iteration crosses the word boundary") {
  Face f;
  for (const int v : {3, 62, 63, 64, 70, 127}) f.set(v);
  std::vector<int> seen;
  for (int v = f.first(); v >= 0; v = f.next(v)) seen.push_back(v);
  CHECK(seen == std::vector<int>{3, 62, 63, 64, 70, 127});
  CHECK(f.members() == seen);
}

TEST_CASE("face algebra") {
  Face a = Face::single(1) | Face::single(5) | Face::single(100);
  Face b = Face::single(5) | Face::single(100) | Face::single(101);
  CHECK((a & b) == (Face::single(5) | Face::single(100)));
  CHECK((a - b) == Face::single(1));
  CHECK(a.intersects(b));
  CHECK(a.contains(Face::single(5)));
  CHECK_FALSE(a.contains(b));
  CHECK(Face::all(5).count() == 5);
  CHECK(Face::all(128).count() == 128);
  CHECK(Face::all(0).empty());
}

TEST_CASE("canonical order: cardinality then numeric") {
  const Face empty;
  const Face v0 = Face::single(0);
  const Face v1 = Face::single(1);
  const Face pair01 = v0 | v1;
  CHECK(canonical_face_less(empty, v0));
  CHECK(canonical_face_less(v0, v1));
  CHECK(canonical_face_less(v1, pair01));
  CHECK_FALSE(canonical_face_less(v0, v0));
  // Higher word dominates the numeric tie-break at equal cardinality.
  CHECK(canonical_face_less(Face::single(63), Face::single(64)));
  CHECK(canonical_face_less(Face::single(2) | Face::single(3),
                            Face::single(0) | Face::single(64)));
}

TEST_CASE("hex round trip") {
  Face f;
  for (const int v : {0, 9, 31, 64, 90}) f.set(v);
  const std::string text = f.hex(91);
  CHECK(Face::from_hex(text) == f);
  CHECK(Face::from_hex(Face{}.hex(12)) == Face{});
  // Fixed width: 2 * ceil(bits / 8) digits.
  CHECK(Face{}.hex(12).size() == 4);
  CHECK(Face{}.hex(128).size() == 32);
  CHECK_THROWS_AS(Face::from_hex("xyz"), Error);
  CHECK_THROWS_AS(Face::from_hex("000000000000000000000000000000000"),
                  Error);  // 33 digits
}
