// Copyright 2026 The polywit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polywit/surface.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "polywit/error.hpp"

namespace polywit {
namespace {

int sigma_edge(const WhiteheadGraph& g, int v, int edge) {
  return edge_of_dart(g.sigma(g.dart_at(v, edge)));
}

int corner_of(const DualPolygon& p, int edge) {
  const auto& es = p.cycle.edges;
  auto it = std::find(es.begin(), es.end(), edge);
  return it == es.end() ? -1 : static_cast<int>(it - es.begin());
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void require_labeled(const WhiteheadGraph& g) {
  if (!g.has_sigma() || !g.has_full_involution()) throw PreconditionError("surface needs connecting maps");
  if (g.rank() < 1 || g.num_vertices() != 2 * g.rank()) throw PreconditionError("surface needs generator labels on vertices");
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.mu(v) != (v ^ 1)) throw PreconditionError("surface needs mu(a) = a^-1");
  }
}

}  // namespace

LinearOrders sigma_compatible_orders(const WhiteheadGraph& graph) {
  LinearOrders out;
  out.rank.assign(2 * static_cast<std::size_t>(graph.num_edges()), -1);
  for (int v = 0; v < graph.num_vertices(); ++v) {
    const int mv = graph.mu(v);
    if (mv < v) continue;
    const auto& darts = graph.darts_at(v);
    for (std::size_t i = 0; i < darts.size(); ++i) {
      out.rank[darts[i]] = static_cast<int>(i);
      out.rank[graph.sigma(darts[i])] = static_cast<int>(i);
    }
  }
  return out;
}

SurfaceComplex build_surface(const WhiteheadGraph& graph, const CycleList& witness) {
  require_labeled(graph);
  if (!verify_witness(graph, witness, false).pass) throw PreconditionError("witness does not pass verification");
  SurfaceComplex sc{graph, sigma_compatible_orders(graph), {}, {}, {}, 0, 0, 0};

  const auto entries = witness.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::int64_t copy = 0; copy < entries[i].multiplicity; ++copy) {
      DualPolygon p;
      p.id = static_cast<int>(sc.polygons.size());
      p.source_entry = static_cast<int>(i);
      p.cycle = entries[i].cycle;
      const int len = static_cast<int>(p.cycle.length());
      for (int j = 0; j < len; ++j) {
        Side s;
        s.vertex = p.cycle.vertices[j];
        s.e = p.cycle.edges[j];
        s.f = p.cycle.edges[(j + 1) % len];
        s.incoming = letter_of(s.vertex).sign > 0;
        const bool e_first = sc.orders.precedes(graph, s.vertex, s.e, s.f);
        s.from_corner = e_first ? (j + 1) % len : j;
        s.to_corner = e_first ? j : (j + 1) % len;
        p.sides.push_back(s);
      }
      sc.polygons.push_back(std::move(p));
    }
  }

  // Incoming (a, {e, f}) meets outgoing (a, {sigma_a(e), sigma_a(f)}).
  using Key = std::tuple<int, int, int>;
  std::map<Key, std::vector<SideRef>> in, out;
  for (const auto& p : sc.polygons) {
    for (int j = 0; j < static_cast<int>(p.sides.size()); ++j) {
      const Side& s = p.sides[j];
      if (s.incoming) {
        in[{s.vertex, std::min(s.e, s.f), std::max(s.e, s.f)}].push_back({p.id, j});
      } else {
        const int a = graph.mu(s.vertex);
        const int x = sigma_edge(graph, s.vertex, s.e);
        const int y = sigma_edge(graph, s.vertex, s.f);
        out[{a, std::min(x, y), std::max(x, y)}].push_back({p.id, j});
      }
    }
  }
  sc.partner.resize(sc.polygons.size());
  for (const auto& p : sc.polygons) sc.partner[p.id].assign(p.sides.size(), SideRef{});
  for (const auto& [key, sides] : in) {
    auto it = out.find(key);
    if (it == out.end() || it->second.size() != sides.size()) {
      throw InternalError("side pairing fails: incoming and outgoing counts differ for a label");
    }
    for (std::size_t k = 0; k < sides.size(); ++k) {
      sc.partner[sides[k].polygon][sides[k].side] = it->second[k];
      sc.partner[it->second[k].polygon][it->second[k].side] = sides[k];
    }
    out.erase(it);
  }
  if (!out.empty()) throw InternalError("side pairing fails: unmatched outgoing sides");
  glue(sc);
  return sc;
}

void glue(SurfaceComplex& sc) {
  const WhiteheadGraph& g = sc.graph;
  std::vector<int> offset;
  int corners = 0, sides = 0;
  for (const auto& p : sc.polygons) {
    offset.push_back(corners);
    corners += static_cast<int>(p.sides.size());
  }
  sides = corners;
  if (sc.partner.size() != sc.polygons.size()) throw InternalError("pairing table has the wrong shape");
  UnionFind uf(corners);
  for (const auto& p : sc.polygons) {
    if (sc.partner[p.id].size() != p.sides.size()) throw InternalError("pairing table has the wrong shape");
    for (int j = 0; j < static_cast<int>(p.sides.size()); ++j) {
      const SideRef t = sc.partner[p.id][j];
      if (t.polygon < 0 || t.polygon >= static_cast<int>(sc.polygons.size()) || t.side < 0 ||
          t.side >= static_cast<int>(sc.polygons[t.polygon].sides.size())) {
        throw InternalError("side left unpaired");
      }
      const SideRef back = sc.partner[t.polygon][t.side];
      if (back.polygon != p.id || back.side != j) throw InternalError("pairing is not an involution");
      const Side& s = p.sides[j];
      const DualPolygon& q = sc.polygons[t.polygon];
      const Side& r = q.sides[t.side];
      if (s.incoming == r.incoming) throw InternalError("paired sides have the same transverse orientation");
      if (!s.incoming) continue;
      if (r.vertex != g.mu(s.vertex)) throw InternalError("paired sides carry different generators");
      const int se = sigma_edge(g, s.vertex, s.e);
      const int sf = sigma_edge(g, s.vertex, s.f);
      if (std::minmax(se, sf) != std::minmax(r.e, r.f)) throw InternalError("paired labels are not related by sigma");
      const int from = p.cycle.edges[s.from_corner];
      if (sigma_edge(g, s.vertex, from) != q.cycle.edges[r.from_corner]) {
        throw InternalError("pairing does not respect internal orientations");
      }
      for (int x : {s.e, s.f}) {
        uf.unite(offset[p.id] + corner_of(p, x), offset[q.id] + corner_of(q, sigma_edge(g, s.vertex, x)));
      }
    }
  }
  std::map<int, int> ids;
  sc.corner_class.assign(sc.polygons.size(), {});
  for (const auto& p : sc.polygons) {
    for (int k = 0; k < static_cast<int>(p.sides.size()); ++k) {
      const int root = uf.find(offset[p.id] + k);
      auto [it, fresh] = ids.emplace(root, static_cast<int>(ids.size()));
      sc.corner_class[p.id].push_back(it->second);
    }
  }
  sc.nu = static_cast<int>(ids.size());
  sc.eta = sides / 2;
  sc.zeta = static_cast<int>(sc.polygons.size());
}

std::vector<BoundaryWord> boundary_words(const SurfaceComplex& sc, const WordList& list) {
  const WhiteheadGraph& g = sc.graph;
  std::vector<std::vector<char>> visited(sc.polygons.size());
  std::vector<int> class_size(sc.nu, 0);
  std::vector<std::pair<int, int>> first(sc.nu, {-1, -1});
  for (const auto& p : sc.polygons) {
    visited[p.id].assign(p.sides.size(), 0);
    for (int k = 0; k < static_cast<int>(p.sides.size()); ++k) {
      const int q = sc.corner_class[p.id][k];
      if (class_size[q]++ == 0) first[q] = {p.id, k};
    }
  }
  std::vector<BoundaryWord> out;
  for (int q = 0; q < sc.nu; ++q) {
    BoundaryWord bw;
    bw.vertex = q;
    const auto [p0, c0] = first[q];
    int p = p0, c = c0, exit = c0;
    int steps = 0;
    do {
      if (visited[p][c]) throw InternalError("link of a glued vertex revisits a corner");
      if (sc.corner_class[p][c] != q) throw InternalError("link leaves its glued vertex");
      visited[p][c] = 1;
      ++steps;
      const DualPolygon& poly = sc.polygons[p];
      const Side& side = poly.sides[exit];
      const int edge = poly.cycle.edges[c];
      // Leaving the polygon agrees with the transverse orientation exactly
      // when the side points outward.
      const bool agrees = !side.incoming;
      bw.letters.push_back({side.generator(), agrees ? 1 : -1});
      bw.edges.push_back(edge);
      bw.crossed.push_back(side.vertex);
      const SideRef t = sc.partner[p][exit];
      const DualPolygon& next = sc.polygons[t.polygon];
      const int len = static_cast<int>(next.sides.size());
      const int nc = corner_of(next, sigma_edge(g, side.vertex, edge));
      if (nc != t.side && nc != (t.side + 1) % len) throw InternalError("link crossing lands off the paired side");
      p = t.polygon;
      c = nc;
      exit = nc == t.side ? (nc + len - 1) % len : nc;
    } while (!(p == p0 && c == c0 && exit == c0));
    if (steps != class_size[q]) throw InternalError("link of a glued vertex does not close over its corners");
    bw.match = match_power_of_conjugate(bw.letters, list, true);
    out.push_back(std::move(bw));
  }
  return out;
}

bool orientable(const SurfaceComplex& sc) {
  const WhiteheadGraph& g = sc.graph;
  std::vector<int> sign(sc.polygons.size(), 0);
  for (std::size_t start = 0; start < sc.polygons.size(); ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::vector<int> stack{static_cast<int>(start)};
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      const DualPolygon& poly = sc.polygons[p];
      for (int j = 0; j < static_cast<int>(poly.sides.size()); ++j) {
        const SideRef t = sc.partner[p][j];
        const DualPolygon& other = sc.polygons[t.polygon];
        const int image = corner_of(other, sigma_edge(g, poly.sides[j].vertex, poly.cycle.edges[j]));
        // same boundary direction across the seam: orientations must differ
        const int want = image == t.side ? -sign[p] : sign[p];
        if (sign[t.polygon] == 0) {
          sign[t.polygon] = want;
          stack.push_back(t.polygon);
        } else if (sign[t.polygon] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

SurfaceReport surface_report(const SurfaceComplex& sc, const WordList& list,
                             const std::optional<std::vector<int>>& partition) {
  SurfaceReport r;
  r.boundary = boundary_words(sc, list);
  for (const auto& bw : r.boundary) {
    if (!bw.match) throw PreconditionError("boundary word at glued vertex " + std::to_string(bw.vertex) + " is not a power of a listed word");
  }
  r.m = sc.nu;
  // S has the dual cell structure: zeta vertices, eta edges, m faces.
  const int chi_s = sc.zeta - sc.eta + r.m;
  r.chi_s_minus_m = sc.zeta - sc.eta;
  if (chi_s - r.m != r.chi_s_minus_m || sc.chi_s0() - sc.nu != r.chi_s_minus_m) {
    throw InternalError("Euler characteristic bookkeeping disagrees");
  }
  if (r.chi_s_minus_m >= 0) {
    throw PreconditionError("chi(S) - m = " + std::to_string(r.chi_s_minus_m) + " >= 0: not a polygonal certificate");
  }
  r.chi_s_doubleprime = 2 * r.chi_s_minus_m;
  r.orientable = orientable(sc);
  if (r.orientable) r.genus = 1 - r.chi_s_doubleprime / 2;

  if (partition && static_cast<int>(partition->size()) != r.m) throw PreconditionError("partition needs one word index per polygon");
  for (const auto& bw : r.boundary) {
    int j = -1;
    if (partition) {
      j = (*partition)[bw.vertex];
    } else {
      const auto& prov = sc.graph.edge(bw.edges.front()).provenance;
      j = prov ? prov->word : bw.match->word_index;
      for (int e : bw.edges) {
        const auto& pe = sc.graph.edge(e).provenance;
        if (pe && pe->word != j) throw InternalError("corners of one polygon come from different words");
      }
    }
    if (j < 0 || j >= static_cast<int>(list.words.size())) throw PreconditionError("partition names an unknown word");
    const auto single = match_power_of_conjugate(bw.letters, make_word_list(list.rank, {list.words[j]}), true);
    if (!single) throw PreconditionError("polygon " + std::to_string(bw.vertex) + " does not read a power of word " + std::to_string(j));
    r.assignment.push_back(j);
    r.exponents.push_back(single->exponent);
    r.positive_degrees[j] += single->exponent;
  }
  for (int j = 0; j < static_cast<int>(list.words.size()); ++j) r.positive_degrees.emplace(j, 0);
  return r;
}

}  // namespace polywit
