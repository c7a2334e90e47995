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

#include "noncross/region_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "noncross/error.hpp"

namespace noncross {

namespace {

using Json = nlohmann::json;

std::vector<Point> parse_ring(const Json& node, const std::string& where) {
  if (!node.is_array()) {
    throw Error(Errc::ParseError, where + " must be an array of [x,y] pairs");
  }
  std::vector<Point> ring;
  ring.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    const Json& pt = node[i];
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number_integer() ||
        !pt[1].is_number_integer()) {
      throw Error(Errc::ParseError, at + " must be an integer pair");
    }
    ring.push_back({pt[0].get<Coord>(), pt[1].get<Coord>()});
  }
  return ring;
}

}  // namespace

Region parse_region_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("outer")) {
    throw Error(Errc::ParseError, "expected an object with an \"outer\" key");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "outer" && key != "holes") {
      throw Error(Errc::ParseError, "unknown key \"" + key + "\"");
    }
    (void)value;
  }
  std::vector<std::vector<Point>> rings;
  rings.push_back(parse_ring(doc["outer"], "outer"));
  if (doc.contains("holes")) {
    const Json& holes = doc["holes"];
    if (!holes.is_array()) {
      throw Error(Errc::ParseError, "holes must be an array of rings");
    }
    for (std::size_t i = 0; i < holes.size(); ++i) {
      rings.push_back(parse_ring(holes[i], "holes[" + std::to_string(i) + "]"));
    }
  }
  return Region::validate(rings);
}

Region parse_region_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::ParseError, "cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_region_text(buffer.str());
}

std::string serialize_rings(const std::vector<std::vector<Point>>& rings) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json outer = nlohmann::ordered_json::array();
  for (const Point& p : rings.at(0)) outer.push_back({p.x, p.y});
  doc["outer"] = std::move(outer);
  if (rings.size() > 1) {
    nlohmann::ordered_json holes = nlohmann::ordered_json::array();
    for (std::size_t r = 1; r < rings.size(); ++r) {
      nlohmann::ordered_json ring = nlohmann::ordered_json::array();
      for (const Point& p : rings[r]) ring.push_back({p.x, p.y});
      holes.push_back(std::move(ring));
    }
    doc["holes"] = std::move(holes);
  }
  return doc.dump() + "\n";
}

std::string serialize_region(const Region& region) {
  return serialize_rings(region.rings());
}

}  // namespace noncross
