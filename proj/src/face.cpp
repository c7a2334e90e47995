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

#include "noncross/face.hpp"

#include "noncross/error.hpp"

namespace noncross {

std::string Face::hex(int bits) const {
  const int digits = 2 * ((bits + 7) / 8);
  std::string out(static_cast<std::size_t>(digits), '0');
  static const char* kDigits = "0123456789abcdef";
  for (int d = 0; d < digits; ++d) {
    const int nibble_index = digits - 1 - d;
    const std::uint64_t word = w_[nibble_index >= 16 ? 1 : 0];
    const int shift = (nibble_index & 15) * 4;
    out[static_cast<std::size_t>(d)] = kDigits[(word >> shift) & 0xf];
  }
  return out;
}

Face Face::from_hex(const std::string& text) {
  if (text.empty() || text.size() > 32) {
    throw Error(Errc::ParseError, "face hex string has bad length");
  }
  Face f;
  for (char c : text) {
    int nibble;
    if (c >= '0' && c <= '9') {
      nibble = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      nibble = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      nibble = c - 'A' + 10;
    } else {
      throw Error(Errc::ParseError, "face hex string has bad digit");
    }
    const std::uint64_t carry = f.w_[0] >> 60;
    f.w_[1] = (f.w_[1] << 4) | carry;
    f.w_[0] = (f.w_[0] << 4) | static_cast<std::uint64_t>(nibble);
  }
  return f;
}

}  // namespace noncross
