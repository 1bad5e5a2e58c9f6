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
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "polywit/builtins.hpp"
#include "polywit/error.hpp"
#include "polywit/fourvertex.hpp"
#include "polywit/generators.hpp"
#include "polywit/surface.hpp"

using namespace polywit;

namespace {

CycleList single(const WhiteheadGraph& g, std::vector<int> edges, std::int64_t k = 1) {
  CycleList list;
  list.add(make_cycle(g, std::move(edges)), k);
  return list;
}

// f_{i+1} = sigma_{x^-1}(f_i) where x is the letter read at crossing i.
void check_chain(const WhiteheadGraph& g, const BoundaryWord& bw) {
  const std::size_t l = bw.edges.size();
  REQUIRE(l == bw.letters.size());
  for (std::size_t i = 0; i < l; ++i) {
    const int v = bw.crossed[i];
    CHECK(vertex_of(bw.letters[i]) == g.mu(v));
    const int next = edge_of_dart(g.sigma(g.dart_at(v, bw.edges[i])));
    CHECK(next == bw.edges[(i + 1) % l]);
  }
}

}  // namespace

TEST_CASE("commutator surface is a torus from one square") {
  const Builtin b = builtin("commutator");
  const WhiteheadGraph& g = b.graph;
  const CycleList w = single(g, {0, 1, 2, 3});
  const SurfaceComplex sc = build_surface(g, w);
  CHECK(sc.polygons.size() == 1);
  CHECK(sc.eta == 2);
  CHECK(sc.zeta == 1);
  CHECK(sc.nu == 1);
  CHECK(sc.chi_s0() == 0);
  const auto words = boundary_words(sc, *b.words);
  REQUIRE(words.size() == 1);
  REQUIRE(words[0].match.has_value());
  CHECK(words[0].match->word_index == 0);
  CHECK(words[0].match->exponent == 1);
  check_chain(g, words[0]);
  const SurfaceReport r = surface_report(sc, *b.words);
  CHECK(r.m == 1);
  CHECK(r.chi_s_minus_m == -1);
  CHECK(r.chi_s_doubleprime == -2);
  CHECK(r.orientable);
  CHECK(r.genus == 2);
  CHECK(r.positive_degrees == std::map<int, std::int64_t>{{0, 1}});
}

TEST_CASE("linear orders are sigma-compatible") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const WhiteheadGraph g = random_four_vertex(rng, 6);
    const LinearOrders o = sigma_compatible_orders(g);
    for (int v = 0; v < 4; ++v) {
      for (int d1 : g.darts_at(v)) {
        for (int d2 : g.darts_at(v)) {
          CHECK((o.rank[d1] < o.rank[d2]) == (o.rank[g.sigma(d1)] < o.rank[g.sigma(d2)]));
        }
      }
    }
  }
}

TEST_CASE("surface preconditions") {
  const Builtin b = builtin("commutator");
  CHECK_THROWS_AS(build_surface(b.graph, CycleList{}), PreconditionError);
  // a square missing its balancing partner is not a witness on the doubled word
  const auto g2 = oracle::graph(2, {"aBaab"});
  const auto cycles = enumerate_cycles(g2);
  CycleList lone;
  for (const auto& c : cycles) {
    CycleList one;
    one.add(c);
    if (!verify_witness(g2, one, false).pass) {
      lone = one;
      break;
    }
  }
  REQUIRE_FALSE(lone.empty());
  CHECK_THROWS_AS(build_surface(g2, lone), PreconditionError);
}

TEST_CASE("bigon-only witness is not a polygonal certificate") {
  const WordList list = oracle::words(2, {"ab", "ab"});
  const WhiteheadGraph g = build_whitehead_graph(list);
  // edges 0, 2 join a and b^-1; edges 1, 3 join b and a^-1
  CycleList w;
  w.add(make_cycle(g, {0, 2}));
  w.add(make_cycle(g, {1, 3}));
  REQUIRE(verify_witness(g, w, false).pass);
  const SurfaceComplex sc = build_surface(g, w);
  CHECK(sc.eta == 2);
  CHECK(sc.zeta == 2);
  CHECK_THROWS_WITH_AS(surface_report(sc, list), doctest::Contains("chi(S) - m = 0"), PreconditionError);
}

TEST_CASE("corrupted pairing is rejected") {
  const Builtin b = builtin("remark-2.4");
  const auto lp = search_witness_lp(b.graph, true);
  REQUIRE(lp.feasible);
  SurfaceComplex sc = build_surface(b.graph, lp.witness);
  CHECK_NOTHROW(glue(sc));

  // swap partners of two sides whose labels differ
  SurfaceComplex bad = sc;
  SideRef s0{0, 0};
  SideRef t0 = bad.partner[0][0];
  SideRef s1{-1, -1};
  for (const auto& p : bad.polygons) {
    for (int j = 0; j < static_cast<int>(p.sides.size()); ++j) {
      const Side& x = p.sides[j];
      const Side& y = bad.polygons[0].sides[0];
      if (x.incoming == y.incoming && (x.vertex != y.vertex || std::minmax(x.e, x.f) != std::minmax(y.e, y.f))) {
        s1 = {p.id, j};
      }
    }
  }
  REQUIRE(s1.polygon >= 0);
  SideRef t1 = bad.partner[s1.polygon][s1.side];
  bad.partner[s0.polygon][s0.side] = t1;
  bad.partner[t1.polygon][t1.side] = s0;
  bad.partner[s1.polygon][s1.side] = t0;
  bad.partner[t0.polygon][t0.side] = s1;
  CHECK_THROWS_AS(glue(bad), InternalError);

  SurfaceComplex broken = sc;
  broken.partner[0][0] = {0, 0};
  CHECK_THROWS_AS(glue(broken), InternalError);

  // the walk around a vertex notices a pairing that glue() never saw
  CHECK_THROWS_AS(boundary_words(bad, *b.words), InternalError);
}

TEST_CASE("basis-changed word gives a hyperbolic certificate") {
  const Builtin b = builtin("remark-2.4");
  const auto lp = search_witness_lp(b.graph, true);
  REQUIRE(lp.feasible);
  const SurfaceComplex sc = build_surface(b.graph, lp.witness);
  const SurfaceReport r = surface_report(sc, *b.words);
  CHECK(r.chi_s_minus_m < 0);
  CHECK(r.chi_s_doubleprime == 2 * r.chi_s_minus_m);
  for (const auto& bw : r.boundary) check_chain(b.graph, bw);
  CHECK(r.positive_degrees.at(0) > 0);
}

TEST_CASE("random word surfaces: Euler bookkeeping, links, uniform degrees") {
  std::mt19937_64 rng(77);
  int built = 0, uniform = 0;
  for (int t = 0; t < 200 && built < 40; ++t) {
    const WordList list = random_word_list(rng, 2, 1 + static_cast<int>(rng() % 2), 7);
    const WhiteheadGraph g = build_whitehead_graph(list);
    const auto lp = search_witness_lp(g, true);
    if (!lp.feasible) continue;
    ++built;
    const SurfaceComplex sc = build_surface(g, lp.witness);
    // vertices from the gluing classes, edges and faces from the polygons
    std::set<int> classes;
    int sides = 0;
    for (const auto& p : sc.polygons) {
      sides += static_cast<int>(p.sides.size());
      for (int q : sc.corner_class[p.id]) classes.insert(q);
    }
    CHECK(static_cast<int>(classes.size()) == sc.nu);
    CHECK(2 * sc.eta == sides);
    CHECK(sc.chi_s0() - sc.nu == sc.zeta - sc.eta);
    CHECK(2 * sc.zeta < 2 * sc.eta);
    const SurfaceReport r = surface_report(sc, list);
    for (const auto& bw : r.boundary) check_chain(g, bw);
    CHECK(r.chi_s_doubleprime % 2 == 0);
    CHECK(r.chi_s_doubleprime < 0);

    // constant edge usage gives every word the same positive degree
    bool four = g.connected() && g.num_vertices() == 4;
    for (int v = 0; v < 4 && four; ++v) four = local_edge_connectivity(g, v, v ^ 1) == g.degree(v);
    if (four) {
      const auto fv = four_vertex_witness(g);
      const auto usage = fv.witness.edge_usage();
      const auto s = usage.begin()->second;
      const SurfaceReport ur = surface_report(build_surface(g, fv.witness), list);
      for (auto [j, deg] : ur.positive_degrees) CHECK(deg == s);
      ++uniform;
    }
  }
  CHECK(built >= 40);
  CHECK(uniform > 10);
}
