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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polywit/error.hpp"
#include "polywit/generators.hpp"
#include "polywit/regular.hpp"

using namespace polywit;

namespace {

WhiteheadGraph plain(int n, std::vector<std::pair<int, int>> endpoints) {
  GraphSpec spec;
  spec.num_vertices = n;
  spec.endpoints = std::move(endpoints);
  spec.mu.assign(n, -1);
  return WhiteheadGraph::create(spec);
}

WhiteheadGraph square() { return plain(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
WhiteheadGraph triangle() { return plain(3, {{0, 1}, {1, 2}, {2, 0}}); }
WhiteheadGraph k4() { return plain(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
WhiteheadGraph bigon() { return plain(2, {{0, 1}, {0, 1}}); }

// Perfect matchings as edge subsets of size n/2 meeting every vertex once.
std::set<std::vector<int>> matchings_by_subsets(const WhiteheadGraph& g) {
  std::set<std::vector<int>> out;
  const int m = g.num_edges();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (2 * __builtin_popcount(mask) != g.num_vertices()) continue;
    std::vector<int> hit(g.num_vertices(), 0);
    std::vector<int> edges;
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1u) {
        ++hit[g.edge(e).u];
        ++hit[g.edge(e).v];
        edges.push_back(e);
      }
    }
    if (std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; })) out.insert(edges);
  }
  return out;
}

// Odd-cut test by recursive inclusion/exclusion.
bool odd_cuts_at_least(const WhiteheadGraph& g, int k) {
  const int n = g.num_vertices();
  std::vector<int> side(n, 0);
  auto rec = [&](auto&& self, int v, int size) -> bool {
    if (v == n) {
      if (size % 2 == 0) return true;
      int cut = 0;
      for (const auto& e : g.edges()) cut += side[e.u] != side[e.v];
      return cut >= k;
    }
    side[v] = 0;
    if (!self(self, v + 1, size)) return false;
    side[v] = 1;
    bool ok = self(self, v + 1, size + 1);
    side[v] = 0;
    return ok;
  };
  return rec(rec, 0, 0);
}

}  // namespace

TEST_CASE("is_k_graph") {
  auto sq = is_k_graph(square());
  CHECK(sq.is_k_graph);
  CHECK(sq.k == 2);
  auto tri = is_k_graph(triangle());
  CHECK_FALSE(tri.is_k_graph);
  CHECK(tri.violating_set == std::vector<int>{0, 1, 2});
  CHECK(tri.violating_cut == 0);
  auto full = is_k_graph(k4());
  CHECK(full.is_k_graph);
  CHECK(full.k == 3);
  CHECK_THROWS_AS(is_k_graph(plain(3, {{0, 1}, {1, 2}})), PreconditionError);
}

TEST_CASE("enumerate_perfect_matchings") {
  CHECK(enumerate_perfect_matchings(square()).size() == 2);
  CHECK(enumerate_perfect_matchings(triangle()).empty());
  CHECK(enumerate_perfect_matchings(k4()).size() == 3);
  CHECK(enumerate_perfect_matchings(bigon()).size() == 2);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_k_graph(rng, 2 + 2 * static_cast<int>(rng() % 3), 2 + static_cast<int>(rng() % 2));
    std::set<std::vector<int>> mine;
    for (const auto& m : enumerate_perfect_matchings(g)) {
      CHECK(m.perfect);
      mine.insert(m.edges);
    }
    CHECK(mine == matchings_by_subsets(g));
  }
}

TEST_CASE("fractional_edge_coloring") {
  auto sq = fractional_edge_coloring(square(), 2);
  CHECK(sq.ell == 2);
  REQUIRE(sq.matchings.size() == 2);
  for (const auto& [m, mult] : sq.matchings) CHECK(mult == 1);

  auto bg = fractional_edge_coloring(bigon(), 2);
  CHECK(bg.ell == 2);
  REQUIRE(bg.matchings.size() == 2);
  CHECK(bg.matchings[0].first.edges.size() == 1);

  auto full = fractional_edge_coloring(k4(), 3);
  CHECK(full.ell == 3);
  CHECK(full.matchings.size() == 3);

  CHECK_THROWS_AS(fractional_edge_coloring(square(), 1), PreconditionError);
  CHECK_THROWS_AS(fractional_edge_coloring(square(), 3), PreconditionError);
}

TEST_CASE("regular_witness on small graphs") {
  auto sq = regular_witness(square());
  CHECK(sq.m1 == 1);
  CHECK(sq.m2 == 1);
  REQUIRE(sq.cycles.size() == 1);
  CHECK(sq.cycles.entries()[0].cycle.length() == 4);
  CHECK(sq.cycles.entries()[0].multiplicity == 1);

  auto full = regular_witness(k4());
  CHECK(full.m1 == 2);
  CHECK(full.m2 == 1);
  CHECK(full.cycles.size() == 3);
  for (const auto& e : full.cycles.entries()) CHECK(e.cycle.length() == 4);

  auto bg = regular_witness(bigon());
  REQUIRE(bg.cycles.size() == 1);
  CHECK(bg.cycles.entries()[0].cycle.length() == 2);
  CHECK_FALSE(bg.cycles.has_long_cycle());

  CHECK_THROWS_AS(regular_witness(triangle()), PreconditionError);
}

TEST_CASE("random k-graphs: odd cuts, counts and verification") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + 2 * static_cast<int>(rng() % 4);
    int k = 2 + static_cast<int>(rng() % 3);
    auto g = random_k_graph(rng, n, k);
    // lambda(v, mu(v)) = k and k-regular give a k-graph
    auto verdict = is_k_graph(g);
    CHECK(verdict.is_k_graph);
    CHECK(odd_cuts_at_least(g, k));

    auto w = regular_witness(g);
    const std::int64_t per = w.coloring.ell / k;
    CHECK(w.m1 == per * (w.coloring.ell - per));
    CHECK(w.m2 == per * per);
    std::vector<std::pair<std::vector<int>, std::int64_t>> raw;
    for (const auto& e : w.cycles.entries()) {
      auto edges = e.cycle.edges;
      std::sort(edges.begin(), edges.end());
      raw.emplace_back(edges, e.multiplicity);
    }
    auto counts = oracle::pair_counts(g, raw);
    for (int v = 0; v < n; ++v) {
      const auto& darts = g.darts_at(v);
      for (std::size_t a = 0; a < darts.size(); ++a) {
        for (std::size_t b = a + 1; b < darts.size(); ++b) {
          CHECK(counts[{v, darts[a] / 2, darts[b] / 2}] == w.m2);
        }
      }
    }
    for (const auto& [e, use] : w.cycles.edge_usage()) CHECK(use == w.m1);
    CHECK(verify_witness(g, w.cycles, false).pass);
    CHECK(oracle::balanced(g, raw));
    bool non_parallel_adjacent = false;
    for (int v = 0; v < n && !non_parallel_adjacent; ++v) {
      for (int d1 : g.darts_at(v)) {
        for (int d2 : g.darts_at(v)) {
          non_parallel_adjacent = non_parallel_adjacent ||
                                  g.edge(d1 / 2).other(v) != g.edge(d2 / 2).other(v);
        }
      }
    }
    if (g.connected() && n >= 4 && non_parallel_adjacent) CHECK(verify_witness(g, w.cycles, true).pass);
  }
}
