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

#include "polywit/regular.hpp"

#include <algorithm>

#include "polywit/error.hpp"
#include "polywit/exact_lp.hpp"

namespace polywit {
namespace {

int require_regular(const WhiteheadGraph& graph) {
  auto k = graph.regularity();
  if (!k) throw PreconditionError("graph is not regular");
  return *k;
}

// Cycle components of a subgraph in which every vertex has degree 0 or 2.
std::vector<Cycle> components(const WhiteheadGraph& graph, const std::vector<int>& edges) {
  std::vector<std::vector<int>> at(graph.num_vertices());
  for (int e : edges) {
    at[graph.edge(e).u].push_back(e);
    at[graph.edge(e).v].push_back(e);
  }
  std::vector<char> used(graph.num_edges(), 0);
  std::vector<Cycle> out;
  for (int start : edges) {
    if (used[start]) continue;
    std::vector<int> comp{start};
    used[start] = 1;
    int prev = start;
    int vertex = graph.edge(start).v;
    while (true) {
      const auto& inc = at[vertex];
      if (inc.size() != 2) throw InternalError("symmetric difference has a vertex of degree " + std::to_string(inc.size()));
      int next = inc[0] == prev ? inc[1] : inc[0];
      if (next == start) break;
      used[next] = 1;
      comp.push_back(next);
      vertex = graph.edge(next).other(vertex);
      prev = next;
    }
    out.push_back(make_cycle(graph, comp));
  }
  return out;
}

}  // namespace

OddCutVerdict is_k_graph(const WhiteheadGraph& graph) {
  OddCutVerdict verdict;
  verdict.k = require_regular(graph);
  const int n = graph.num_vertices();
  if (n > 24) throw PreconditionError("odd-cut enumeration limited to 24 vertices");
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) % 2 == 0) continue;
    int cut = 0;
    for (const Edge& e : graph.edges()) cut += ((mask >> e.u) & 1u) != ((mask >> e.v) & 1u);
    if (cut < verdict.k) {
      for (int v = 0; v < n; ++v) {
        if (mask >> v & 1u) verdict.violating_set.push_back(v);
      }
      verdict.violating_cut = cut;
      return verdict;
    }
  }
  verdict.is_k_graph = true;
  return verdict;
}

std::vector<Matching> enumerate_perfect_matchings(const WhiteheadGraph& graph) {
  const int n = graph.num_vertices();
  std::vector<Matching> out;
  if (n % 2 != 0) return out;
  std::vector<char> covered(n, 0);
  std::vector<int> chosen;
  auto search = [&](auto&& self) -> void {
    int v = 0;
    while (v < n && covered[v]) ++v;
    if (v == n) {
      Matching m{chosen, true};
      std::sort(m.edges.begin(), m.edges.end());
      out.push_back(std::move(m));
      return;
    }
    covered[v] = 1;
    for (int d : graph.darts_at(v)) {
      int e = edge_of_dart(d);
      int w = graph.edge(e).other(v);
      if (covered[w]) continue;
      covered[w] = 1;
      chosen.push_back(e);
      self(self);
      chosen.pop_back();
      covered[w] = 0;
    }
    covered[v] = 0;
  };
  search(search);
  return out;
}

FractionalColoring fractional_edge_coloring(const WhiteheadGraph& graph, int k) {
  if (k <= 1) throw PreconditionError("fractional coloring needs k > 1");
  if (require_regular(graph) != k) throw PreconditionError("graph is not " + std::to_string(k) + "-regular");
  const auto matchings = enumerate_perfect_matchings(graph);
  const int m = graph.num_edges();
  LpProblem lp;
  lp.num_vars = static_cast<int>(matchings.size());
  lp.rows.resize(static_cast<std::size_t>(m) + 1);
  lp.rhs.assign(static_cast<std::size_t>(m), Rational(1, k));
  lp.rhs.emplace_back(1);
  lp.cost.assign(matchings.size(), Rational(0));
  for (int j = 0; j < lp.num_vars; ++j) {
    for (int e : matchings[j].edges) lp.rows[e].emplace_back(j, Rational(1));
    lp.rows[m].emplace_back(j, Rational(1));
  }
  LpResult solved = solve_lp(lp);
  if (solved.status != LpStatus::kOptimal) {
    throw PreconditionError("(1/k) 1 is not in the perfect matching polytope; not a k-graph");
  }
  FractionalColoring coloring;
  coloring.k = k;
  mpz_class ell = denominator_lcm(solved.x);
  coloring.ell = to_int64(ell);
  for (int j = 0; j < lp.num_vars; ++j) {
    if (sgn(solved.x[j]) == 0) continue;
    Rational scaled = solved.x[j] * ell;
    coloring.matchings.emplace_back(matchings[j], to_int64(scaled.get_num()));
  }
  std::vector<std::int64_t> cover(m, 0);
  for (const auto& [mt, mult] : coloring.matchings) {
    for (int e : mt.edges) cover[e] += mult;
  }
  if (coloring.ell % k != 0 ||
      std::any_of(cover.begin(), cover.end(), [&](std::int64_t c) { return c != coloring.ell / k; })) {
    throw InternalError("fractional coloring does not cover edges uniformly");
  }
  return coloring;
}

RegularWitness regular_witness(const WhiteheadGraph& graph) {
  const int k = require_regular(graph);
  if (k <= 1) throw PreconditionError("regular witness needs k > 1");
  if (!is_k_graph(graph).is_k_graph) throw PreconditionError("graph is not a k-graph");
  RegularWitness out;
  out.coloring = fractional_edge_coloring(graph, k);
  const auto& ms = out.coloring.matchings;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      std::vector<int> delta;
      std::set_symmetric_difference(ms[i].first.edges.begin(), ms[i].first.edges.end(),
                                    ms[j].first.edges.begin(), ms[j].first.edges.end(),
                                    std::back_inserter(delta));
      for (const Cycle& c : components(graph, delta)) out.cycles.add(c, ms[i].second * ms[j].second);
    }
  }
  const std::int64_t per = out.coloring.ell / k;
  out.m1 = per * (out.coloring.ell - per);
  out.m2 = per * per;

  const auto usage = out.cycles.edge_usage();
  for (int e = 0; e < graph.num_edges(); ++e) {
    auto it = usage.find(e);
    if ((it == usage.end() ? 0 : it->second) != out.m1) throw InternalError("edge usage differs from m1");
  }
  const auto pairs = pair_counts(out.cycles);
  for (int v = 0; v < graph.num_vertices(); ++v) {
    const auto& darts = graph.darts_at(v);
    for (std::size_t a = 0; a < darts.size(); ++a) {
      for (std::size_t b = a + 1; b < darts.size(); ++b) {
        auto it = pairs.find({v, edge_of_dart(darts[a]), edge_of_dart(darts[b])});
        if ((it == pairs.end() ? 0 : it->second) != out.m2) throw InternalError("pair usage differs from m2");
      }
    }
  }
  return out;
}

}  // namespace polywit
