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

#include "polywit/builtins.hpp"

#include "polywit/error.hpp"

namespace polywit {
namespace {

Builtin from_words(const std::string& name, const std::string& description, const std::string& text) {
  WordList list = parse_word_list(text);
  WhiteheadGraph g = build_whitehead_graph(list);
  return {name, description, std::move(list), std::move(g)};
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"commutator", "remark-2.4", "remark-2.4-nonminimal", "example-6.1", "figure-7"};
}

WhiteheadGraph figure7_graph() {
  constexpr int w = 0, mw = 1, u = 2, mu = 3;
  GraphSpec spec;
  spec.num_vertices = 4;
  spec.rank = 2;
  spec.endpoints = {{w, u},  {w, mw}, {w, mw}, {w, mu}, {w, mu},  {w, u},   {w, u},  {mw, u},
                    {mw, mu}, {mw, u}, {mw, mu}, {mw, mu}, {u, mu}, {u, mu}, {u, mu}};
  auto dart = [&](int edge, int vertex) { return dart_of(edge, spec.endpoints[edge].first == vertex ? 0 : 1); };
  spec.sigma.assign(2 * spec.endpoints.size(), -1);
  auto link = [&](int e, int x, int f, int y) {
    spec.sigma[dart(e, x)] = dart(f, y);
    spec.sigma[dart(f, y)] = dart(e, x);
  };
  // w side: e_i -> f_i
  const int e_at_w[] = {0, 1, 2, 3, 4, 5, 6};
  const int f_at_mw[] = {7, 8, 1, 2, 9, 10, 11};
  for (int i = 0; i < 7; ++i) link(e_at_w[i], w, f_at_mw[i], mw);
  // u side: edge-id order on both ends
  const int at_u[] = {0, 5, 6, 7, 9, 12, 13, 14};
  const int at_mu[] = {3, 4, 8, 10, 11, 12, 13, 14};
  for (int i = 0; i < 8; ++i) link(at_u[i], u, at_mu[i], mu);
  return WhiteheadGraph::create(spec);
}

Builtin builtin(const std::string& name) {
  if (name == "commutator") return from_words(name, "commutator aba^-1b^-1", "rank 2\nabAB\n");
  if (name == "remark-2.4") return from_words(name, "polygonal image ab^-1a^2b", "rank 2\naBaab\n");
  if (name == "remark-2.4-nonminimal") {
    return from_words(name, "non-polygonal word abab^2ab^3", "rank 2\nababbabbb\n");
  }
  if (name == "example-6.1") return from_words(name, "a(ab^-1)^3b^-2, no list of cycles", "rank 2\na(aB)^3B^2\n");
  if (name == "figure-7") return {name, "four-vertex graph with a type (1) and a type (6) part", std::nullopt, figure7_graph()};
  throw PreconditionError("unknown built-in '" + name + "'");
}

}  // namespace polywit
