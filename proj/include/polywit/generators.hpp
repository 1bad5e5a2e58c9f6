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

#ifndef POLYWIT_GENERATORS_HPP_
#define POLYWIT_GENERATORS_HPP_

#include <random>
#include <utility>
#include <vector>

#include "polywit/whitehead.hpp"
#include "polywit/words.hpp"

namespace polywit {

using Rng = std::mt19937_64;

// Random connecting maps: for each pair {v, mu(v)} a uniform bijection of
// darts. Requires deg(v) = deg(mu(v)) everywhere.
WhiteheadGraph with_random_sigma(const WhiteheadGraph& graph, Rng& rng);

// Loopless k-regular multigraph on n vertices (n even) with mu(v) = v ^ 1,
// random connecting maps and lambda(v, mu(v)) = k at every vertex.
// Rejection-sampled.
WhiteheadGraph random_k_graph(Rng& rng, int n, int k);

// Connected graph on four vertices with mu(v) = v ^ 1, every degree at most
// `max_degree`, lambda(v, mu(v)) = deg(v) everywhere and random connecting
// maps. Rejection-sampled.
WhiteheadGraph random_four_vertex(Rng& rng, int max_degree = 6);

// `count` random cyclically reduced words of length 1..max_length.
WordList random_word_list(Rng& rng, int rank, int count, int max_length);

}  // namespace polywit

#endif  // POLYWIT_GENERATORS_HPP_
