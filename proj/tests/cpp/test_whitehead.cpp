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

#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polywit/error.hpp"
#include "polywit/whitehead.hpp"

using namespace polywit;

namespace {

// Edge multiplicities keyed by the unordered pair of endpoint names.
std::map<std::pair<std::string, std::string>, int> multiplicities(const WhiteheadGraph& g) {
  std::map<std::pair<std::string, std::string>, int> out;
  for (const auto& e : g.edges()) {
    auto x = g.vertex_name(e.u), y = g.vertex_name(e.v);
    if (y < x) std::swap(x, y);
    ++out[{x, y}];
  }
  return out;
}

WordList random_list(std::mt19937_64& rng, int rank) {
  std::vector<Word> ws;
  int count = 1 + static_cast<int>(rng() % 3);
  while (static_cast<int>(ws.size()) < count) {
    Word w;
    int len = 2 + static_cast<int>(rng() % 7);
    for (int i = 0; i < len; ++i) {
      w.letters.push_back({1 + static_cast<int>(rng() % rank), rng() % 2 ? 1 : -1});
    }
    try {
      ws.push_back(cyclic_reduce(w));
    } catch (const TrivialWordError&) {
    }
  }
  return make_word_list(rank, ws);
}

const int kA = 0, kAinv = 1, kB = 2, kBinv = 3;

}  // namespace

TEST_CASE("commutator graph is a 4-cycle") {
  auto g = oracle::graph(2, {"abAB"});
  using M = std::map<std::pair<std::string, std::string>, int>;
  CHECK(multiplicities(g) == M{{{"a1", "a2-"}, 1}, {{"a1", "a2"}, 1}, {{"a1-", "a2"}, 1}, {{"a1-", "a2-"}, 1}});
  for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 2);
  // position 0 edge at b^-1 maps to the position 1 edge at b
  CHECK(connecting_map(g, kBinv, g.dart_at(kBinv, 0)) == g.dart_at(kB, 1));
}

TEST_CASE("lambda-deficient word graph multiplicities") {
  auto g = oracle::graph(2, {"a(aB)^3B^2"});
  using M = std::map<std::pair<std::string, std::string>, int>;
  CHECK(multiplicities(g) ==
        M{{{"a1", "a1-"}, 1}, {{"a1", "a2"}, 3}, {{"a1-", "a2-"}, 3}, {{"a2", "a2-"}, 2}});
  CHECK(g.degree(kA) == 4);
  CHECK(g.degree(kB) == 5);
  CHECK(local_edge_connectivity(g, kA, kAinv) == 3);
  CHECK(oracle::min_cut(g, kA, kAinv) == 3);
  auto report = analyze(g);
  CHECK_FALSE(report.minimal);
  CHECK_FALSE(report.diskbusting);
}

TEST_CASE("minimal and non-minimal two-generator words") {
  auto big = oracle::graph(2, {"abab^2ab^3"});
  using M = std::map<std::pair<std::string, std::string>, int>;
  CHECK(multiplicities(big) == M{{{"a1", "a2-"}, 3}, {{"a1-", "a2"}, 3}, {{"a2", "a2-"}, 3}});
  CHECK(local_edge_connectivity(big, kB, kBinv) == 3);
  CHECK(big.degree(kB) == 6);
  CHECK_FALSE(analyze(big).minimal);

  auto small = oracle::graph(2, {"aBa^2b"});
  auto report = analyze(small);
  CHECK(report.minimal);
  CHECK(report.diskbusting);

  auto comm = analyze(oracle::graph(2, {"abAB"}));
  CHECK(comm.minimal);
  CHECK(comm.diskbusting);
  CHECK(comm.k == 2);
  CHECK(local_edge_connectivity(oracle::graph(2, {"abAB"}), kA, kAinv) == 2);
}

TEST_CASE("connecting map of a single word") {
  // U = {b^-1 a b a^2}: e joins a^-1 and a (subword aa), e' joins a and b.
  auto g = oracle::graph(2, {"Baba^2"});
  const int e = 3, e_prime = 4;
  CHECK(g.edge(e).u == kA);
  CHECK(g.edge(e).v == kAinv);
  CHECK(connecting_map(g, kAinv, g.dart_at(kAinv, e)) == g.dart_at(kA, e_prime));
  CHECK(connecting_map(g, kA, g.dart_at(kA, e_prime)) == g.dart_at(kAinv, e));
  CHECK_THROWS_AS(connecting_map(g, kB, g.dart_at(kA, e)), PreconditionError);
}

TEST_CASE("trace_word") {
  auto g = oracle::graph(2, {"abAB"});
  auto t = trace_word(g, 3, {kA, kB, kAinv, kBinv});
  CHECK(t.closed);
  CHECK(t.edges == std::vector<int>{3, 0, 1, 2, 3});
  CHECK_THROWS_AS(trace_word(g, 0, {kA, kAinv}), PreconditionError);

  // f1 = sigma_a(f0), f2 = sigma_{c^-1}(f1), f0 = sigma_{b^-1}(f2) in W({a^-1 c b})
  auto h = oracle::graph(3, {"Acb"});
  auto chain = trace_word(h, 2, {1, 4, 2});
  CHECK(chain.closed);
  CHECK(chain.edges == std::vector<int>{2, 0, 1, 2});
}

TEST_CASE("word-built graph invariants over random lists") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 200; ++trial) {
    int rank = 1 + static_cast<int>(rng() % 3);
    WordList list = random_list(rng, rank);
    auto g = build_whitehead_graph(list);
    CHECK(g.num_edges() == static_cast<int>(list.total_length()));
    for (int v = 0; v < g.num_vertices(); ++v) {
      CHECK(g.degree(v) == g.degree(g.mu(v)));
      for (int d : g.darts_at(v)) {
        int s = connecting_map(g, v, d);
        CHECK(g.dart_vertex(s) == g.mu(v));
        CHECK(connecting_map(g, g.mu(v), s) == d);
      }
      CHECK(local_edge_connectivity(g, v, g.mu(v)) == oracle::min_cut(g, v, g.mu(v)));
    }
    auto report = analyze(g);
    bool minimal = true;
    for (const auto& r : report.vertices) minimal = minimal && r.lambda == r.degree;
    CHECK(report.minimal == minimal);
    CHECK(report.diskbusting == (report.minimal && report.connected));
    // every cyclic position walk closes up on its own word
    for (const auto& w : list.words) {
      int base = 0;
      for (int j = 0; j < w.index; ++j) base += static_cast<int>(list.words[j].size());
      const int n = static_cast<int>(w.size());
      for (int p = 0; p < n; ++p) {
        std::vector<int> verts;
        for (int i = 1; i <= n; ++i) verts.push_back(vertex_of(w.letters[(p + i) % n]));
        auto t = trace_word(g, base + p, verts);
        CHECK(t.closed);
      }
    }
  }
}

TEST_CASE("standalone graphs are validated") {
  GraphSpec loop;
  loop.num_vertices = 2;
  loop.endpoints = {{0, 0}};
  CHECK_THROWS_AS(WhiteheadGraph::create(loop), LoopError);

  GraphSpec bad_sigma;
  bad_sigma.num_vertices = 2;
  bad_sigma.endpoints = {{0, 1}, {0, 1}};
  bad_sigma.sigma = {2, 3, 0, 1};  // dart at vertex 0 sent to a dart at vertex 0
  CHECK_THROWS_AS(WhiteheadGraph::create(bad_sigma), PreconditionError);

  GraphSpec bigon = bad_sigma;
  bigon.sigma = {3, 2, 1, 0};
  auto g = WhiteheadGraph::create(bigon);
  CHECK(g.has_sigma());
  CHECK(g.sigma(0) == 3);
}
