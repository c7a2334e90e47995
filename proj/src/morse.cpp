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

#include "noncross/morse.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "noncross/error.hpp"

namespace noncross {

namespace {

std::vector<int> incident_to(const Complex& cplx, int vertex) {
  std::vector<int> out;
  for (int i = 0; i < cplx.vertex_count(); ++i) {
    const Diagonal& d = cplx.label(i);
    if (d.u == vertex || d.v == vertex) out.push_back(i);
  }
  // Ascending far endpoint. Distinct diagonals at a shared vertex have
  // distinct far endpoints.
  std::sort(out.begin(), out.end(), [&](int a, int b) {
    const Diagonal& da = cplx.label(a);
    const Diagonal& db = cplx.label(b);
    const int fa = da.u == vertex ? da.v : da.u;
    const int fb = db.u == vertex ? db.v : db.u;
    return fa < fb;
  });
  return out;
}

void finish_order(DiagonalOrder& order, const Complex& cplx) {
  order.rank.assign(static_cast<std::size_t>(cplx.vertex_count()), -1);
  for (std::size_t pos = 0; pos < order.order.size(); ++pos) {
    const int v = order.order[pos];
    if (v < 0 || v >= cplx.vertex_count() ||
        order.rank[static_cast<std::size_t>(v)] != -1) {
      throw Error(Errc::InvariantViolation, "order is not a permutation");
    }
    order.rank[static_cast<std::size_t>(v)] = static_cast<int>(pos);
  }
  if (order.order.size() != static_cast<std::size_t>(cplx.vertex_count())) {
    throw Error(Errc::InvariantViolation, "order is not a permutation");
  }
  for (const int v : order.dx) order.dx_mask.set(v);
}

}  // namespace

DiagonalOrder DiagonalOrder::mouth_rooted(const Complex& cplx,
                                          int mouth_vertex) {
  DiagonalOrder out;
  out.mouth = mouth_vertex;
  out.dx = incident_to(cplx, mouth_vertex);
  if (out.dx.empty()) {
    throw Error(Errc::NoCandidate,
                "no diagonal is incident to vertex " +
                    std::to_string(mouth_vertex));
  }
  Face dx_mask;
  for (const int v : out.dx) dx_mask.set(v);
  for (int v = 0; v < cplx.vertex_count(); ++v) {
    if (!dx_mask.test(v)) out.order.push_back(v);
  }
  out.order.insert(out.order.end(), out.dx.begin(), out.dx.end());
  finish_order(out, cplx);
  return out;
}

DiagonalOrder DiagonalOrder::from_permutation(const Complex& cplx,
                                              int mouth_vertex,
                                              std::vector<int> permutation) {
  DiagonalOrder out;
  out.mouth = mouth_vertex;
  out.dx = incident_to(cplx, mouth_vertex);
  if (out.dx.empty()) {
    throw Error(Errc::NoCandidate,
                "no diagonal is incident to vertex " +
                    std::to_string(mouth_vertex));
  }
  out.order = std::move(permutation);
  finish_order(out, cplx);
  return out;
}

int pairing_function(const Complex& cplx, const DiagonalOrder& order,
                     const Face& sigma) {
  const Face rest = sigma - order.dx_mask;
  Face blocked;
  for (int v = rest.first(); v >= 0; v = rest.next(v)) {
    blocked = blocked | cplx.crossing_mask(v);
  }
  for (auto it = order.dx.rbegin(); it != order.dx.rend(); ++it) {
    if (!blocked.test(*it)) return *it;
  }
  throw Error(Errc::NoCandidate,
              "every diagonal at the mouth crosses the face");
}

PairingReport verify_pairing_conditions(const Complex& cplx,
                                        const DiagonalOrder& order) {
  PairingReport report;
  const auto& faces = cplx.faces();
  std::vector<int> f(faces.size(), -1);
  for (std::size_t id = 0; id < faces.size(); ++id) {
    try {
      f[id] = pairing_function(cplx, order, faces[id]);
    } catch (const Error& e) {
      if (e.code() != Errc::NoCandidate) throw;
      ++report.undefined;
      if (!report.first_undefined) report.first_undefined = faces[id];
    }
  }

  const auto fail = [](PairingReport::Condition& c, const Face& a,
                       const Face& b) {
    ++c.failed;
    if (!c.first_failure) c.first_failure = {a, b};
  };

  for (std::size_t id = 0; id < faces.size(); ++id) {
    if (f[id] < 0) continue;
    const Face sigma = faces[id];
    const int fs = f[id];
    if (!sigma.test(fs)) {
      // σ ∈ Q_f.
      Face plus = sigma;
      plus.set(fs);
      const std::int64_t plus_id = cplx.face_id(plus);
      ++report.conditions[0].checked;
      if (plus_id < 0) {
        fail(report.conditions[0], sigma, plus);
        continue;
      }
      ++report.conditions[1].checked;
      if (f[static_cast<std::size_t>(plus_id)] != fs) {
        fail(report.conditions[1], sigma, plus);
      }
      for (int y = sigma.first(); y >= 0; y = sigma.next(y)) {
        Face swapped = plus;
        swapped.reset(y);
        const std::int64_t sid = cplx.face_id(swapped);
        if (sid < 0) continue;
        ++report.conditions[3].checked;
        const int fo = f[static_cast<std::size_t>(sid)];
        if (fo < 0 ||
            order.rank[static_cast<std::size_t>(fs)] >
                order.rank[static_cast<std::size_t>(fo)]) {
          fail(report.conditions[3], sigma, swapped);
        }
      }
    } else {
      // τ ∉ Q_f.
      Face minus = sigma;
      minus.reset(fs);
      const std::int64_t mid = cplx.face_id(minus);
      if (mid < 0) continue;
      ++report.conditions[2].checked;
      if (f[static_cast<std::size_t>(mid)] != fs) {
        fail(report.conditions[2], sigma, minus);
      }
    }
  }
  return report;
}

MorseMatching build_matching(const Complex& cplx, const DiagonalOrder& order) {
  MorseMatching out;
  const auto& faces = cplx.faces();
  out.f_value.assign(faces.size(), -1);
  out.partner.assign(faces.size(), -1);
  for (std::size_t id = 0; id < faces.size(); ++id) {
    out.f_value[id] = pairing_function(cplx, order, faces[id]);
  }
  for (std::size_t id = 0; id < faces.size(); ++id) {
    const Face sigma = faces[id];
    const int fs = out.f_value[id];
    if (sigma.test(fs)) continue;  // only pair from the Q_f side
    Face plus = sigma;
    plus.set(fs);
    const std::int64_t plus_id = cplx.face_id(plus);
    if (plus_id < 0) {
      throw Error(Errc::InvariantViolation,
                  "matched coface is not a face of the complex");
    }
    if (out.partner[id] != -1 ||
        out.partner[static_cast<std::size_t>(plus_id)] != -1) {
      throw Error(Errc::NotAMatching, "face matched twice");
    }
    out.partner[id] = plus_id;
    out.partner[static_cast<std::size_t>(plus_id)] =
        static_cast<std::int64_t>(id);
    out.pairs.push_back({static_cast<std::uint32_t>(id),
                         static_cast<std::uint32_t>(plus_id)});
  }
  for (std::size_t id = 0; id < faces.size(); ++id) {
    if (out.partner[id] == -1) {
      out.critical.push_back(static_cast<std::uint32_t>(id));
    }
  }
  return out;
}

bool verify_acyclicity(const Complex& cplx, const MorseMatching& matching) {
  // Kahn's algorithm over the modified Hasse diagram. Nodes are face ids;
  // cover edges run σ -> σ∪{f(σ)} when matched, downward otherwise.
  const auto& faces = cplx.faces();
  const std::size_t count = faces.size();
  std::vector<std::uint32_t> head(count + 1, 0);
  std::vector<std::uint32_t> indegree(count, 0);

  const auto for_each_edge = [&](auto&& visit) {
    for (std::size_t id = 0; id < count; ++id) {
      const Face face = faces[id];
      for (int y = face.first(); y >= 0; y = face.next(y)) {
        Face sub = face;
        sub.reset(y);
        const std::int64_t sub_id = cplx.face_id(sub);
        if (sub_id < 0) continue;
        const std::size_t s = static_cast<std::size_t>(sub_id);
        if (matching.partner[s] == static_cast<std::int64_t>(id)) {
          visit(s, id);  // matched pair: edge points up
        } else {
          visit(id, s);
        }
      }
    }
  };

  for_each_edge([&](std::size_t from, std::size_t) { ++head[from + 1]; });
  for (std::size_t i = 1; i <= count; ++i) head[i] += head[i - 1];
  std::vector<std::uint32_t> edges(head[count]);
  {
    std::vector<std::uint32_t> cursor(head.begin(), head.end() - 1);
    for_each_edge([&](std::size_t from, std::size_t to) {
      edges[cursor[from]++] = static_cast<std::uint32_t>(to);
      ++indegree[to];
    });
  }

  std::vector<std::uint32_t> ready;
  for (std::size_t id = 0; id < count; ++id) {
    if (indegree[id] == 0) ready.push_back(static_cast<std::uint32_t>(id));
  }
  std::size_t processed = 0;
  while (!ready.empty()) {
    const std::uint32_t id = ready.back();
    ready.pop_back();
    ++processed;
    for (std::uint32_t e = head[id]; e < head[id + 1]; ++e) {
      if (--indegree[edges[e]] == 0) ready.push_back(edges[e]);
    }
  }
  return processed == count;
}

std::vector<CollapseStep> collapse(const Complex& cplx,
                                   const MorseMatching& matching) {
  const auto& faces = cplx.faces();
  const std::size_t count = faces.size();
  if (!matching.critical.empty() || count % 2 != 0) {
    throw Error(Errc::NotAMatching,
                "collapse requires a perfect matching on the face poset");
  }

  // Remaining cofaces per face; a matched pair (σ, τ) is free when τ has no
  // coface left and σ's only coface left is τ.
  std::vector<std::uint32_t> up_count(count, 0);
  for (std::size_t id = 0; id < count; ++id) {
    const Face face = faces[id];
    for (int y = face.first(); y >= 0; y = face.next(y)) {
      Face sub = face;
      sub.reset(y);
      ++up_count[static_cast<std::size_t>(cplx.face_id(sub))];
    }
  }

  std::vector<std::size_t> pair_index(count, static_cast<std::size_t>(-1));
  for (std::size_t p = 0; p < matching.pairs.size(); ++p) {
    pair_index[matching.pairs[p].first] = p;
    pair_index[matching.pairs[p].second] = p;
  }

  // The empty face's pair survives as the final vertex.
  const std::int64_t root_vertex = matching.partner[cplx.face_id(Face{})];
  const std::size_t skip_pair = pair_index[static_cast<std::size_t>(root_vertex)];

  std::vector<bool> alive(count, true);
  std::vector<bool> done(matching.pairs.size(), false);
  const auto is_free = [&](std::size_t p) {
    const auto [lo, hi] = matching.pairs[p];
    return !done[p] && alive[lo] && alive[hi] && up_count[hi] == 0 &&
           up_count[lo] == 1;
  };

  // Schedule by decreasing coface cardinality, canonical order within a
  // cardinality (face ids grow canonically, so the id is the tie key).
  using Key = std::pair<int, std::int64_t>;  // (-card, id)
  std::priority_queue<std::pair<Key, std::size_t>,
                      std::vector<std::pair<Key, std::size_t>>,
                      std::greater<>>
      queue;
  const auto push_if_free = [&](std::size_t p) {
    if (p == skip_pair || p == static_cast<std::size_t>(-1) || !is_free(p)) {
      return;
    }
    const std::uint32_t hi = matching.pairs[p].second;
    queue.push({{-faces[hi].count(), static_cast<std::int64_t>(hi)}, p});
  };
  for (std::size_t p = 0; p < matching.pairs.size(); ++p) push_if_free(p);

  std::vector<CollapseStep> log;
  log.reserve(matching.pairs.size() - 1);
  while (!queue.empty()) {
    const std::size_t p = queue.top().second;
    queue.pop();
    if (!is_free(p)) continue;  // stale queue entry
    const auto [lo, hi] = matching.pairs[p];
    done[p] = true;
    for (const std::uint32_t id : {hi, lo}) {
      alive[id] = false;
      const Face face = faces[id];
      for (int y = face.first(); y >= 0; y = face.next(y)) {
        Face sub = face;
        sub.reset(y);
        const std::size_t sid =
            static_cast<std::size_t>(cplx.face_id(sub));
        --up_count[sid];
        push_if_free(pair_index[sid]);
      }
    }
    log.push_back({faces[lo], faces[hi]});
  }

  if (log.size() != matching.pairs.size() - 1) {
    throw Error(Errc::StuckCollapse,
                "no free pair available after " + std::to_string(log.size()) +
                    " collapses");
  }
  return log;
}

bool replay_collapse(const Complex& cplx,
                     const std::vector<CollapseStep>& log) {
  const auto& faces = cplx.faces();
  std::vector<bool> alive(faces.size(), true);
  for (const CollapseStep& step : log) {
    const std::int64_t free_id = cplx.face_id(step.free_face);
    const std::int64_t coface_id = cplx.face_id(step.coface);
    if (free_id < 0 || coface_id < 0 ||
        !alive[static_cast<std::size_t>(free_id)] ||
        !alive[static_cast<std::size_t>(coface_id)]) {
      return false;
    }
    if (!step.coface.contains(step.free_face) ||
        step.coface.count() != step.free_face.count() + 1) {
      return false;
    }
    // The free face must lie in no remaining proper superset but the coface.
    for (std::size_t id = 0; id < faces.size(); ++id) {
      if (!alive[id] || static_cast<std::int64_t>(id) == free_id ||
          static_cast<std::int64_t>(id) == coface_id) {
        continue;
      }
      if (faces[id].contains(step.free_face)) return false;
    }
    alive[static_cast<std::size_t>(free_id)] = false;
    alive[static_cast<std::size_t>(coface_id)] = false;
  }
  return true;
}

bool mouth_incidence_check(const Complex& cplx, int mouth_vertex) {
  Face dx_mask;
  for (int i = 0; i < cplx.vertex_count(); ++i) {
    const Diagonal& d = cplx.label(i);
    if (d.u == mouth_vertex || d.v == mouth_vertex) dx_mask.set(i);
  }
  for (const std::uint32_t fid : cplx.facet_ids()) {
    if (!cplx.faces()[fid].intersects(dx_mask)) return false;
  }
  return true;
}

}  // namespace noncross
