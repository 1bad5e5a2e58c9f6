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

#ifndef POLYWIT_WHITEHEAD_HPP_
#define POLYWIT_WHITEHEAD_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polywit/words.hpp"

namespace polywit {

// Darts are edge-ends: dart 2*e is the end of edge e at its first endpoint,
// dart 2*e+1 the end at its second endpoint.
inline int dart_of(int edge, int side) { return 2 * edge + side; }
inline int edge_of_dart(int dart) { return dart / 2; }

// Vertex ids for the Whitehead graph: a_g -> 2(g-1), a_g^{-1} -> 2(g-1)+1,
// so the canonical involution is v ^ 1.
inline int vertex_of(Letter l) { return 2 * (l.generator - 1) + (l.sign < 0); }
inline Letter letter_of(int vertex) {
  return {vertex / 2 + 1, (vertex & 1) ? -1 : 1};
}

struct Provenance {
  int word = 0;
  int position = 0;
};

struct Edge {
  int id = 0;
  int u = 0;
  int v = 0;
  std::optional<Provenance> provenance;

  int endpoint(int side) const { return side == 0 ? u : v; }
  int other(int vertex) const { return vertex == u ? v : u; }
};

struct GraphSpec {
  int num_vertices = 0;
  // Vertices below 2*rank are named a_g / a_g^{-1}; 0 when no labels apply.
  int rank = 0;
  std::vector<std::pair<int, int>> endpoints;
  std::vector<std::optional<Provenance>> provenance;
  // mu[v], or -1 where the involution is undefined. Empty: v ^ 1.
  std::vector<int> mu;
  // sigma[dart] = dart at mu(vertex(dart)). Empty: no connecting maps.
  std::vector<int> sigma;
  // Optional display names for vertices.
  std::vector<std::string> names;
};

// A loopless multigraph with an involution on vertices and, optionally,
// connecting maps stored at dart level. Immutable once built.
class WhiteheadGraph {
 public:
  // Validates the input: endpoints in range, no loops (LoopError), mu a
  // fixed-point-free involution where defined, and sigma satisfying
  // sigma(sigma(d)) = d with sigma(d) at mu(vertex(d)).
  static WhiteheadGraph create(GraphSpec spec);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int rank() const { return rank_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(id); }

  int mu(int vertex) const { return mu_.at(vertex); }
  bool has_full_involution() const;
  bool has_sigma() const { return !sigma_.empty(); }
  const std::vector<int>& mu_table() const { return mu_; }
  const std::vector<int>& sigma_table() const { return sigma_; }

  int dart_vertex(int dart) const {
    return edges_[edge_of_dart(dart)].endpoint(dart & 1);
  }
  // Darts at v, ordered by edge id.
  const std::vector<int>& darts_at(int vertex) const {
    return darts_at_.at(vertex);
  }
  int degree(int vertex) const {
    return static_cast<int>(darts_at(vertex).size());
  }
  // The dart of `edge` at `vertex`, or -1 if they are not incident.
  int dart_at(int vertex, int edge) const;

  // sigma on darts; requires has_sigma().
  int sigma(int dart) const { return sigma_.at(dart); }

  std::string vertex_name(int vertex) const;
  // Inverse of vertex_name; -1 when unknown.
  int vertex_by_name(const std::string& name) const;

  bool connected() const;
  // Some vertex degree k shared by all vertices.
  std::optional<int> regularity() const;

  // Edges in `keep`, renumbered 0.. in order; ids of the result map back
  // through `kept`. Connecting maps are dropped.
  WhiteheadGraph edge_subgraph(const std::vector<int>& keep) const;

  const GraphSpec& spec() const { return spec_; }

 private:
  WhiteheadGraph() = default;

  GraphSpec spec_;
  int num_vertices_ = 0;
  int rank_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> mu_;
  std::vector<int> sigma_;
  std::vector<std::vector<int>> darts_at_;
};

// One edge per length-2 cyclic subword x_i x_{i+1}, joining x_i and
// x_{i+1}^{-1}; connecting maps follow position succession. Throws
// PreconditionError for words that are not cyclically reduced.
WhiteheadGraph build_whitehead_graph(const WordList& list);

// sigma_v(d) for a dart d at v. Throws PreconditionError if d is not at v.
int connecting_map(const WhiteheadGraph& graph, int vertex, int dart);

// Maximum number of pairwise edge-disjoint x-y paths (unit-capacity
// augmenting paths, edges scanned in id order).
int local_edge_connectivity(const WhiteheadGraph& graph, int x, int y);

struct VertexReport {
  int vertex = 0;
  int degree = 0;
  int lambda = 0;  // lambda(v, mu(v))
};

struct AnalysisReport {
  std::vector<VertexReport> vertices;
  bool minimal = false;
  bool connected = false;
  bool diskbusting = false;
  std::optional<int> k;
};

AnalysisReport analyze(const WhiteheadGraph& graph);

struct TraceResult {
  std::vector<Letter> letters;
  // f_0, f_1, ..., f_l
  std::vector<int> edges;
  bool closed = false;
};

// Applies sigma_{x_1^{-1}}, ..., sigma_{x_l^{-1}} starting from edge f0 and
// reports whether the walk returns to f0. `vertices` are x_1..x_l.
TraceResult trace_word(const WhiteheadGraph& graph, int start_edge,
                       const std::vector<int>& vertices);

}  // namespace polywit

#endif  // POLYWIT_WHITEHEAD_HPP_
