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

#include "polywit/generators.hpp"

#include <algorithm>

#include "polywit/error.hpp"

namespace polywit {
namespace {

constexpr int kMaxAttempts = 1000000;

bool satisfies_lambda(const WhiteheadGraph& g) {
  for (int v = 0; v < g.num_vertices(); v += 2) {
    if (g.degree(v) != g.degree(v + 1)) return false;
    if (local_edge_connectivity(g, v, v + 1) != g.degree(v)) return false;
  }
  return true;
}

WhiteheadGraph from_pairs(int n, const std::vector<std::pair<int, int>>& endpoints) {
  GraphSpec spec;
  spec.num_vertices = n;
  spec.endpoints = endpoints;
  return WhiteheadGraph::create(std::move(spec));
}

}  // namespace

WhiteheadGraph with_random_sigma(const WhiteheadGraph& graph, Rng& rng) {
  GraphSpec spec = graph.spec();
  spec.sigma.assign(2 * static_cast<std::size_t>(graph.num_edges()), -1);
  for (int v = 0; v < graph.num_vertices(); ++v) {
    int mv = graph.mu(v);
    if (mv < 0) throw PreconditionError("connecting maps need mu defined everywhere");
    if (v > mv) continue;
    std::vector<int> image = graph.darts_at(mv);
    if (image.size() != graph.darts_at(v).size()) throw PreconditionError("deg(v) != deg(mu(v))");
    std::shuffle(image.begin(), image.end(), rng);
    for (std::size_t i = 0; i < image.size(); ++i) {
      int d = graph.darts_at(v)[i];
      spec.sigma[d] = image[i];
      spec.sigma[image[i]] = d;
    }
  }
  return WhiteheadGraph::create(std::move(spec));
}

WhiteheadGraph random_k_graph(Rng& rng, int n, int k) {
  if (n < 2 || n % 2 != 0 || k < 1) throw PreconditionError("random k-graph needs even n >= 2 and k >= 1");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), k, v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<std::pair<int, int>> endpoints;
    bool loop = false;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      loop = loop || stubs[i] == stubs[i + 1];
      endpoints.emplace_back(std::min(stubs[i], stubs[i + 1]), std::max(stubs[i], stubs[i + 1]));
    }
    if (loop) continue;
    std::sort(endpoints.begin(), endpoints.end());
    WhiteheadGraph g = from_pairs(n, endpoints);
    if (satisfies_lambda(g)) return with_random_sigma(g, rng);
  }
  throw InternalError("random k-graph: rejection sampling gave up");
}

WhiteheadGraph random_four_vertex(Rng& rng, int max_degree) {
  static const std::pair<int, int> kPairs[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::uniform_int_distribution<int> mult(0, 3);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<std::pair<int, int>> endpoints;
    for (const auto& p : kPairs) endpoints.insert(endpoints.end(), mult(rng), p);
    WhiteheadGraph g = from_pairs(4, endpoints);
    bool ok = g.connected();
    for (int v = 0; v < 4 && ok; ++v) ok = g.degree(v) > 0 && g.degree(v) <= max_degree;
    if (ok && satisfies_lambda(g)) return with_random_sigma(g, rng);
  }
  throw InternalError("random four-vertex graph: rejection sampling gave up");
}

WordList random_word_list(Rng& rng, int rank, int count, int max_length) {
  if (rank < 1 || count < 1 || max_length < 1) throw PreconditionError("bad word list parameters");
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> len(1, max_length);
  std::vector<Word> words;
  while (static_cast<int>(words.size()) < count) {
    Word w;
    const int l = len(rng);
    while (static_cast<int>(w.size()) < l) {
      Letter x{gen(rng), rng() % 2 ? 1 : -1};
      if (!w.empty() && x == w.letters.back().inverse()) continue;
      if (static_cast<int>(w.size()) == l - 1 && w.size() > 0 && x == w.letters.front().inverse()) continue;
      w.letters.push_back(x);
    }
    if (is_cyclically_reduced(w)) words.push_back(std::move(w));
  }
  return make_word_list(rank, words);
}

}  // namespace polywit
