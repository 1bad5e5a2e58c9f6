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

#ifndef POLYWIT_FOURVERTEX_HPP_
#define POLYWIT_FOURVERTEX_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polywit/whitehead.hpp"
#include "polywit/witness.hpp"

namespace polywit {

enum class Color { kNone, kRed, kBlue };

// Directed graph on e_0..e_{m-1} (nodes 0..m-1) and f_0..f_{m-1} (nodes
// m..2m-1). Arcs f_i -> e_i always; e_i -> f_j when both name the same edge
// of G. Nodes of in- or out-degree 0 carry a color.
struct AuxDigraph {
  int m = 0;
  std::vector<int> succ;  // -1: out-degree 0
  std::vector<int> pred;  // -1: in-degree 0
  std::vector<Color> color;

  // Graph context; -1 / empty for abstract digraphs.
  int w = -1;
  int mu_w = -1;
  int u = -1;
  int mu_u = -1;
  std::vector<int> e_edges;  // graph edge named by e_i
  std::vector<int> f_edges;  // graph edge named by f_i

  int num_nodes() const { return 2 * m; }
  bool is_e(int node) const { return node < m; }
};

// Builds an abstract digraph: `arcs` lists (i, j) for the arcs e_i -> f_j,
// `colors` has one entry per node. Validates the structure.
AuxDigraph make_aux_digraph(int m, const std::vector<std::pair<int, int>>& arcs,
                            std::vector<Color> colors);

// The digraph at w, with u the lowest vertex outside {w, mu(w)}. e_i runs
// over the darts at w in edge-id order and f_i = sigma_w(e_i). Requires a
// four-vertex graph with connecting maps. Validates components, color
// balance and 2r <= m, 2b <= m.
AuxDigraph build_auxiliary_digraph(const WhiteheadGraph& graph, int w);

struct Component {
  bool cycle = false;
  // Path: from its in-degree-0 start to its out-degree-0 end. Cycle: from
  // its lowest e node along the arcs.
  std::vector<int> nodes;

  int length() const {
    return static_cast<int>(cycle ? nodes.size() : nodes.size() - 1);
  }
  bool is_short() const { return length() < 3; }
};

// Components ordered by their lowest node.
std::vector<Component> components(const AuxDigraph& d);

struct GoodPart {
  int type = 0;                 // 1..8
  std::vector<int> components;  // indices into components(d)
};

// At most half of the nodes of the part are red and at most half blue.
bool part_is_good(const AuxDigraph& d, const std::vector<Component>& comps,
                  const std::vector<int>& part);

// Whether the components of `part` have the shape of `part.type`.
bool matches_type(const AuxDigraph& d, const std::vector<Component>& comps,
                  const GoodPart& part);

// Partition of a good digraph into good parts of the eight types, following
// the inductive case analysis. Throws PreconditionError when the digraph is
// not good or has fewer than four nodes.
std::vector<GoodPart> decompose_good(const AuxDigraph& d);

struct Orbit {
  std::vector<std::pair<int, int>> pairs;  // e indices, i < j, sorted
  std::int64_t copies = 1;
};

struct Completion {
  std::vector<GoodPart> parts;
  std::vector<std::int64_t> part_constants;
  // Arcs e_i -> f_j added to make every in- and out-degree 1.
  std::vector<std::pair<int, int>> added;
  std::vector<int> pi;  // pi[i] = j: the length-2 walk e_i -> f_j -> e_j
  std::vector<Orbit> orbits;
  std::int64_t c = 0;
  // Set when a part has no orbit recipe; the caller must fall back to the
  // LP search. `pi` and `orbits` are then empty.
  bool needs_fallback = false;
  std::string note;
};

// Per-part completions and orbit lists, combined with c = lcm of the part
// constants. Validates that the orbits are genuine orbits of pi^(2), that no
// orbit pair is red-red or blue-blue and that every e_i is covered c times.
Completion uniform_permutation(const AuxDigraph& d);

// {e, sigma_w(pi(e))} is a matching of G for every e at w.
bool is_w_good(const WhiteheadGraph& graph, const AuxDigraph& d, const std::vector<int>& pi);

struct LevelRecord {
  int removed_edge = -1;  // -1 at the regular base case
  int u = -1;
  int a = 0;  // edges at u meeting w or mu(w)
  int b = 0;  // edges joining u and mu(u)
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
};

struct GoodList {
  CycleList cycles;
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  bool long_cycle = false;
  std::vector<LevelRecord> levels;  // outermost first
};

// Removes u - mu(u) edges one at a time until the graph is regular, then
// builds the list back up level by level. Every level is checked for
// the four level invariants and c1 = c * c2' * (a + b - 1).
GoodList inductive_witness(const WhiteheadGraph& graph, const AuxDigraph& d,
                           const Completion& completion);

struct FourVertexResult {
  int w = -1;
  AuxDigraph digraph;
  Completion completion;
  GoodList good;
  CycleList witness;
  bool used_lp_fallback = false;
};

// Picks w of minimum degree (lowest id), builds the digraph, the uniform
// completion and the inductive list. The result passes verify_witness with
// require_long and uses every edge equally often.
FourVertexResult four_vertex_witness(const WhiteheadGraph& graph);

}  // namespace polywit

#endif  // POLYWIT_FOURVERTEX_HPP_
