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

#ifndef POLYWIT_REGULAR_HPP_
#define POLYWIT_REGULAR_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "polywit/whitehead.hpp"
#include "polywit/witness.hpp"

namespace polywit {

struct OddCutVerdict {
  bool is_k_graph = false;
  int k = 0;
  // First odd set (as a vertex list) with |delta(X)| < k, in bitmask order.
  std::vector<int> violating_set;
  int violating_cut = 0;
};

// Exhaustive odd-cut test. Throws PreconditionError unless the graph is
// regular; practical up to about 20 vertices.
OddCutVerdict is_k_graph(const WhiteheadGraph& graph);

struct Matching {
  std::vector<int> edges;  // ascending
  bool perfect = false;
};

// All perfect matchings; parallel edges count as different matchings.
std::vector<Matching> enumerate_perfect_matchings(const WhiteheadGraph& graph);

// Perfect matchings with multiplicities covering each edge ell / k times.
struct FractionalColoring {
  int k = 0;
  std::int64_t ell = 0;
  std::vector<std::pair<Matching, std::int64_t>> matchings;
};

// Writes (1/k) 1 as a convex combination of perfect matchings by exact LP
// and clears denominators. Throws PreconditionError for k <= 1 or when no
// combination exists.
FractionalColoring fractional_edge_coloring(const WhiteheadGraph& graph, int k);

struct RegularWitness {
  CycleList cycles;
  FractionalColoring coloring;
  std::int64_t m1 = 0;  // cycles through each edge
  std::int64_t m2 = 0;  // cycles through each pair of distinct edges at a vertex
};

// Cycle components of M_i and M_j for every unordered pair of distinct
// matchings, weighted by the product of their multiplicities. The counted
// edge and pair usages are checked against m1 = (l/k)(l - l/k) and
// m2 = (l/k)^2.
RegularWitness regular_witness(const WhiteheadGraph& graph);

}  // namespace polywit

#endif  // POLYWIT_REGULAR_HPP_
