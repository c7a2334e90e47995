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

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace noncross {

// A face is a set of complex vertices (diagonal indices), stored as a fixed
// 128-bit set. Complexes with more than 128 vertices are rejected upstream.
class Face {
 public:
  static constexpr int kMaxBits = 128;

  constexpr Face() = default;
  constexpr Face(std::uint64_t lo, std::uint64_t hi) : w_{lo, hi} {}

  static constexpr Face single(int i) {
    Face f;
    f.set(i);
    return f;
  }

  // Set of all indices below `count`.
  static constexpr Face all(int count) {
    Face f;
    if (count >= 64) {
      f.w_[0] = ~std::uint64_t{0};
      f.w_[1] = count == 128 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << (count - 64)) - 1;
    } else if (count > 0) {
      f.w_[0] = (std::uint64_t{1} << count) - 1;
    }
    return f;
  }

  constexpr bool test(int i) const {
    return (w_[i >> 6] >> (i & 63)) & std::uint64_t{1};
  }
  constexpr void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  constexpr int count() const {
    return std::popcount(w_[0]) + std::popcount(w_[1]);
  }
  constexpr bool empty() const { return w_[0] == 0 && w_[1] == 0; }

  constexpr bool contains(const Face& sub) const {
    return (sub.w_[0] & ~w_[0]) == 0 && (sub.w_[1] & ~w_[1]) == 0;
  }
  constexpr bool intersects(const Face& o) const {
    return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
  }

  friend constexpr Face operator|(Face a, const Face& b) {
    a.w_[0] |= b.w_[0];
    a.w_[1] |= b.w_[1];
    return a;
  }
  friend constexpr Face operator&(Face a, const Face& b) {
    a.w_[0] &= b.w_[0];
    a.w_[1] &= b.w_[1];
    return a;
  }
  // Set difference a \ b.
  friend constexpr Face operator-(Face a, const Face& b) {
    a.w_[0] &= ~b.w_[0];
    a.w_[1] &= ~b.w_[1];
    return a;
  }

  friend constexpr bool operator==(const Face&, const Face&) = default;

  // Numeric order on the raw bits; total but cardinality-oblivious.
  friend constexpr std::strong_ordering operator<=>(const Face& a,
                                                    const Face& b) {
    if (a.w_[1] != b.w_[1]) return a.w_[1] <=> b.w_[1];
    return a.w_[0] <=> b.w_[0];
  }

  // Lowest set index, or -1 if empty.
  constexpr int first() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  // Lowest set index strictly above `i`, or -1.
  constexpr int next(int i) const {
    ++i;
    if (i >= kMaxBits) return -1;
    if (i < 64) {
      const std::uint64_t rest = w_[0] & (~std::uint64_t{0} << i);
      if (rest) return std::countr_zero(rest);
      if (w_[1]) return 64 + std::countr_zero(w_[1]);
      return -1;
    }
    const std::uint64_t rest = w_[1] & (~std::uint64_t{0} << (i - 64));
    return rest ? 64 + std::countr_zero(rest) : -1;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  // Fixed-width lowercase hex, highest bit first, 2*ceil(bits/8) digits.
  std::string hex(int bits) const;
  static Face from_hex(const std::string& text);

  constexpr std::uint64_t lo() const { return w_[0]; }
  constexpr std::uint64_t hi() const { return w_[1]; }

 private:
  std::uint64_t w_[2] = {0, 0};
};

// Order used everywhere faces are listed: by cardinality, then numerically.
inline constexpr bool canonical_face_less(const Face& a, const Face& b) {
  const int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a < b;
}

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept {
    // splitmix-style mix of the two words.
    std::uint64_t h = f.lo() * 0x9e3779b97f4a7c15ULL;
    h ^= h >> 32;
    h += f.hi() * 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace noncross
