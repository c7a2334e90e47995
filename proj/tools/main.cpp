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
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "noncross/complex.hpp"
#include "noncross/cut.hpp"
#include "noncross/error.hpp"
#include "noncross/homology.hpp"
#include "noncross/morse.hpp"
#include "noncross/region.hpp"
#include "noncross/region_io.hpp"
#include "noncross/report.hpp"
#include "noncross/svg.hpp"

namespace {

using namespace noncross;

std::size_t face_cap_from_env() {
  if (const char* env = std::getenv("NONCROSS_MAX_FACES")) {
    const long long value = std::atoll(env);
    if (value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultMaxFaces;
}

Diagonal parse_diagonal_flag(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    throw Error(Errc::ParseError, "--diagonal expects U,V");
  }
  try {
    const int u = std::stoi(text.substr(0, comma));
    const int v = std::stoi(text.substr(comma + 1));
    return {std::min(u, v), std::max(u, v)};
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "--diagonal expects two integers U,V");
  }
}

int complex_vertex_of(const Complex& cplx, const Diagonal& d) {
  for (int i = 0; i < cplx.vertex_count(); ++i) {
    if (cplx.label(i) == d) return i;
  }
  throw Error(Errc::NotADiagonal, "[" + std::to_string(d.u) + "," +
                                      std::to_string(d.v) +
                                      "] is not a diagonal of the region");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path);
  out << content;
}

std::string fv_string(const FVector& fv) {
  std::string out = "[";
  for (std::size_t i = 0; i < fv.by_card().size(); ++i) {
    if (i != 0) out += ", ";
    out += std::to_string(fv.by_card()[i]);
  }
  return out + "]";
}

void run_validate(const std::string& file) {
  const Region region = parse_region_file(file);
  std::cout << "valid: n=" << region.vertex_count()
            << " h=" << region.hole_count()
            << (region.convex() ? " convex" : " non-convex") << "\n";
}

void run_diagonals(const std::string& file) {
  const Region region = parse_region_file(file);
  for (const Diagonal& d : region.diagonals()) {
    std::cout << d.u << " " << d.v << "\n";
  }
}

void run_vertices(const std::string& file) {
  const Region region = parse_region_file(file);
  std::cout << "index ring convexity principal ear mouth\n";
  for (int v = 0; v < region.vertex_count(); ++v) {
    const VertexClassification c = region.classify_vertex(v);
    const char* conv = c.convexity == Convexity::Convex     ? "convex"
                       : c.convexity == Convexity::Reflex   ? "reflex"
                                                            : "straight";
    std::cout << v << " " << region.ring_of(v) << " " << conv << " "
              << (c.principal ? "yes" : "no") << " " << (c.ear ? "yes" : "no")
              << " " << (c.mouth ? "yes" : "no") << "\n";
  }
}

void run_complex(const std::string& file, std::size_t max_faces,
                 bool count_only) {
  const Region region = parse_region_file(file);
  const Complex cplx = build_complex(region, {max_faces, false});
  if (count_only) {
    std::cout << cplx.facet_ids().size() << "\n";
    return;
  }
  std::cout << "diagonals: " << cplx.vertex_count() << "\n"
            << "dim: " << cplx.dim() << "\n"
            << "f_vector: " << fv_string(cplx.f_vector()) << "\n"
            << "faces: " << cplx.face_count() << "\n"
            << "facets: " << cplx.facet_ids().size() << "\n"
            << "pure: " << (cplx.pure() ? "yes" : "no") << "\n"
            << "expected_dim: "
            << region.vertex_count() + 3 * region.hole_count() - 4 << "\n";
}

void run_triangulations(const std::string& file, std::size_t max_faces,
                        bool count_only) {
  const Region region = parse_region_file(file);
  const Complex cplx = build_complex(region, {max_faces, false});
  if (count_only) {
    std::cout << cplx.facet_ids().size() << "\n";
    return;
  }
  for (const std::uint32_t fid : cplx.facet_ids()) {
    const Face facet = cplx.faces()[fid];
    bool first = true;
    for (int v = facet.first(); v >= 0; v = facet.next(v)) {
      const Diagonal& d = cplx.label(v);
      std::cout << (first ? "" : " ") << d.u << "," << d.v;
      first = false;
    }
    std::cout << "\n";
  }
}

int run_morse(const std::string& file, int mouth_flag,
              const std::string& log_path, std::size_t max_faces) {
  const Region region = parse_region_file(file);
  if (region.mouths().empty()) {
    throw Error(Errc::NoMouth, "no mouth: use homology pipeline");
  }
  int mouth = region.select_mouth();
  if (mouth_flag >= 0) {
    const auto mouths = region.mouths();
    if (std::find(mouths.begin(), mouths.end(), mouth_flag) == mouths.end()) {
      throw Error(Errc::NoMouth, "vertex " + std::to_string(mouth_flag) +
                                     " is not a mouth of the region");
    }
    mouth = mouth_flag;
  }
  const Complex cplx = build_complex(region, {max_faces, false});
  const DiagonalOrder order = DiagonalOrder::mouth_rooted(cplx, mouth);
  std::cout << "mouth: " << mouth << "\n";

  const PairingReport pairing = verify_pairing_conditions(cplx, order);
  for (std::size_t c = 0; c < pairing.conditions.size(); ++c) {
    std::cout << "condition " << c + 1 << ": checked "
              << pairing.conditions[c].checked << ", failed "
              << pairing.conditions[c].failed << "\n";
  }
  std::cout << "pairing defined everywhere: "
            << (pairing.undefined == 0 ? "yes" : "no") << "\n";
  if (!pairing.all_pass()) {
    std::cout << "pairing conditions: FAIL\n";
    return 1;
  }
  std::cout << "pairing conditions: pass\n";

  const MorseMatching matching = build_matching(cplx, order);
  std::cout << "matched pairs: " << matching.pairs.size()
            << ", critical faces: " << matching.critical.size() << "\n";
  if (!matching.critical.empty()) {
    std::cout << "perfect matching: FAIL\n";
    return 1;
  }
  if (!verify_acyclicity(cplx, matching)) {
    std::cout << "acyclic: FAIL\n";
    return 1;
  }
  std::cout << "acyclic: yes\n";

  const auto log = collapse(cplx, matching);
  const Face survivor =
      cplx.faces()[static_cast<std::size_t>(matching.partner[0])];
  const Diagonal d = cplx.label(survivor.first());
  std::cout << "collapse steps: " << log.size() << "\n"
            << "surviving vertex: [" << d.u << "," << d.v << "]\n"
            << "mouth incidence: "
            << (mouth_incidence_check(cplx, mouth) ? "yes" : "no") << "\n";
  if (!log_path.empty()) {
    std::string text;
    for (const CollapseStep& step : log) {
      text += step.free_face.hex(cplx.vertex_count()) + " " +
              step.coface.hex(cplx.vertex_count()) + "\n";
    }
    write_file(log_path, text);
  }
  return 0;
}

void run_homology(const std::string& file, std::size_t max_faces) {
  const Region region = parse_region_file(file);
  const Complex cplx = build_complex(region, {max_faces, false});
  const HomologyProfile profile = reduced_homology(cplx);
  std::cout << "reduced_betti:";
  for (const long long b : profile.reduced_betti) std::cout << " " << b;
  std::cout << "\n"
            << "torsion_free: " << (profile.torsion_free ? "yes" : "no")
            << "\n"
            << "euler_check: " << (profile.euler_check ? "yes" : "no") << "\n";
  const ShapeClass shape = classify(profile, cplx, region);
  const int dim =
      shape == ShapeClass::SphereLike ? profile.top_nonzero() : cplx.dim();
  std::cout << "classification: " << shape_class_name(shape) << ", dim " << dim
            << " (homology-level proxy)\n";
}

void run_link(const std::string& file, const std::string& diagonal_flag,
              std::size_t max_faces) {
  const Region region = parse_region_file(file);
  const Diagonal d = parse_diagonal_flag(diagonal_flag);
  const Complex cplx = build_complex(region, {max_faces, false});
  const Complex lk = link(cplx, complex_vertex_of(cplx, d));
  std::cout << "link vertices: " << lk.vertex_count() << "\n"
            << "f_vector: " << fv_string(lk.f_vector()) << "\n";
  const HomologyProfile profile = reduced_homology(lk);
  std::cout << "reduced_betti:";
  for (const long long b : profile.reduced_betti) std::cout << " " << b;
  std::cout << "\n";
  const int top = profile.top_nonzero();
  if (top >= 0 && profile.reduced_betti[static_cast<std::size_t>(top)] == 1) {
    bool sphere = true;
    for (int k = 0; k < top; ++k) {
      sphere &= profile.reduced_betti[static_cast<std::size_t>(k)] == 0;
    }
    if (sphere) {
      std::cout << "classification: sphere-like homology, dim " << top << "\n";
      return;
    }
  }
  std::cout << (profile.all_zero()
                    ? "classification: trivial reduced homology\n"
                    : "classification: other\n");
}

void run_cut(const std::string& file, const std::string& diagonal_flag) {
  const Region region = parse_region_file(file);
  const Diagonal d = parse_diagonal_flag(diagonal_flag);
  const CutResult result = cut_along_diagonal(region, d);
  std::cout << "separating: " << (result.separating ? "yes" : "no") << "\n";
  for (const CutPiece& piece : result.pieces) {
    if (piece.pinched) {
      // Not a valid region file: the walk repeats the cut endpoints.
      nlohmann::ordered_json doc;
      nlohmann::ordered_json outer = nlohmann::ordered_json::array();
      for (const Point& p : piece.rings.at(0)) outer.push_back({p.x, p.y});
      doc["outer"] = std::move(outer);
      if (piece.rings.size() > 1) {
        nlohmann::ordered_json holes = nlohmann::ordered_json::array();
        for (std::size_t r = 1; r < piece.rings.size(); ++r) {
          nlohmann::ordered_json ring = nlohmann::ordered_json::array();
          for (const Point& p : piece.rings[r]) ring.push_back({p.x, p.y});
          holes.push_back(std::move(ring));
        }
        doc["holes"] = std::move(holes);
      }
      doc["pinched"] = true;
      std::cout << doc.dump() << "\n";
    } else {
      std::cout << serialize_rings(piece.rings);
    }
  }
}

int run_report(const std::string& file, const std::string& out_path,
               std::size_t max_faces) {
  const Region region = parse_region_file(file);
  const auto start = std::chrono::steady_clock::now();
  const ReportResult result = build_report(region, {max_faces});
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::cerr << "timings: report built in " << elapsed.count() << " ms\n";
  if (out_path.empty()) {
    std::cout << result.json;
  } else {
    write_file(out_path, result.json);
    std::cout << "all_claims_pass: " << (result.all_claims_pass ? "yes" : "no")
              << "\n";
  }
  return result.all_claims_pass ? 0 : 1;
}

void run_svg(const std::string& file, const std::string& out_path,
             bool show_diagonals) {
  const Region region = parse_region_file(file);
  SvgOptions options;
  options.show_diagonals = show_diagonals;
  const std::string svg = render_svg(region, options);
  if (out_path.empty()) {
    std::cout << svg;
  } else {
    write_file(out_path, svg);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "noncross: the complex of non-crossing diagonals of a polygonal "
      "region, with collapse and homology certification"};
  app.require_subcommand(1);
  const std::size_t env_cap = face_cap_from_env();

  std::string file;
  std::string diagonal_flag;
  std::string out_path;
  std::string log_path;
  std::size_t max_faces = env_cap;
  int mouth_flag = -1;
  bool count_only = false;
  bool show_diagonals = false;

  const auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "region file (JSON)")->required();
  };

  add_file(app.add_subcommand("validate", "parse and validate a region"));
  add_file(app.add_subcommand("diagonals", "list diagonals, one per line"));
  add_file(app.add_subcommand("vertices", "per-vertex classification table"));

  CLI::App* cmd_complex =
      app.add_subcommand("complex", "f-vector, facets, purity");
  add_file(cmd_complex);
  cmd_complex->add_option("--max-faces", max_faces, "face cap");
  cmd_complex->add_flag("--count-only", count_only, "print facet count only");

  CLI::App* cmd_tri =
      app.add_subcommand("triangulations", "facets as diagonal lists");
  add_file(cmd_tri);
  cmd_tri->add_flag("--count-only", count_only, "print facet count only");

  CLI::App* cmd_morse =
      app.add_subcommand("morse", "pairing conditions, matching, collapse");
  add_file(cmd_morse);
  cmd_morse->add_option("--mouth", mouth_flag, "mouth vertex to root at");
  cmd_morse->add_option("--log", log_path, "write the collapse log here");

  add_file(app.add_subcommand("homology", "Betti profile and classification"));

  CLI::App* cmd_link = app.add_subcommand("link", "link of a diagonal");
  add_file(cmd_link);
  cmd_link->add_option("--diagonal", diagonal_flag, "diagonal U,V")->required();

  CLI::App* cmd_cut = app.add_subcommand("cut", "cut the region along a diagonal");
  add_file(cmd_cut);
  cmd_cut->add_option("--diagonal", diagonal_flag, "diagonal U,V")->required();

  CLI::App* cmd_report = app.add_subcommand("report", "full verification report");
  add_file(cmd_report);
  cmd_report->add_option("--out", out_path, "output path");

  CLI::App* cmd_svg = app.add_subcommand("svg", "render the region as SVG");
  add_file(cmd_svg);
  cmd_svg->add_option("--out", out_path, "output path");
  cmd_svg->add_flag("--show-diagonals", show_diagonals, "draw the diagonals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // usage problems are input errors
  }

  try {
    if (app.got_subcommand("validate")) {
      run_validate(file);
    } else if (app.got_subcommand("diagonals")) {
      run_diagonals(file);
    } else if (app.got_subcommand("vertices")) {
      run_vertices(file);
    } else if (app.got_subcommand("complex")) {
      run_complex(file, max_faces, count_only);
    } else if (app.got_subcommand("triangulations")) {
      run_triangulations(file, max_faces, count_only);
    } else if (app.got_subcommand("morse")) {
      return run_morse(file, mouth_flag, log_path, max_faces);
    } else if (app.got_subcommand("homology")) {
      run_homology(file, max_faces);
    } else if (app.got_subcommand("link")) {
      run_link(file, diagonal_flag, max_faces);
    } else if (app.got_subcommand("cut")) {
      run_cut(file, diagonal_flag);
    } else if (app.got_subcommand("report")) {
      return run_report(file, out_path, max_faces);
    } else if (app.got_subcommand("svg")) {
      run_svg(file, out_path, show_diagonals);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
