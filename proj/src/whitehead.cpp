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

#include "polywit/whitehead.hpp"

#include <algorithm>
#include <queue>

#include "polywit/error.hpp"

namespace polywit {

WhiteheadGraph WhiteheadGraph::create(GraphSpec spec) {
  WhiteheadGraph g;
  const int n = spec.num_vertices;
  if (n < 0) throw PreconditionError("negative vertex count");
  g.num_vertices_ = n;
  g.rank_ = spec.rank;
  if (spec.mu.empty()) {
    spec.mu.resize(n);
    for (int v = 0; v < n; ++v) spec.mu[v] = (v ^ 1) < n ? (v ^ 1) : -1;
  }
  if (static_cast<int>(spec.mu.size()) != n) {
    throw PreconditionError("involution table has wrong size");
  }
  for (int v = 0; v < n; ++v) {
    int m = spec.mu[v];
    if (m == -1) continue;
    if (m < 0 || m >= n) throw PreconditionError("involution maps outside the vertex set");
    if (m == v) throw PreconditionError("involution has a fixed point at vertex " + std::to_string(v));
    if (spec.mu[m] != v) throw PreconditionError("mu is not an involution");
  }
  g.mu_ = spec.mu;

  g.darts_at_.assign(n, {});
  for (std::size_t i = 0; i < spec.endpoints.size(); ++i) {
    auto [a, b] = spec.endpoints[i];
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw PreconditionError("edge " + std::to_string(i) + " has an endpoint out of range");
    }
    if (a == b) throw LoopError("edge " + std::to_string(i) + " is a loop");
    Edge e;
    e.id = static_cast<int>(i);
    e.u = a;
    e.v = b;
    if (i < spec.provenance.size()) e.provenance = spec.provenance[i];
    g.edges_.push_back(e);
    g.darts_at_[a].push_back(dart_of(e.id, 0));
    g.darts_at_[b].push_back(dart_of(e.id, 1));
  }

  if (!spec.sigma.empty()) {
    const int darts = 2 * g.num_edges();
    if (static_cast<int>(spec.sigma.size()) != darts) {
      throw PreconditionError("connecting map table has wrong size");
    }
    for (int d = 0; d < darts; ++d) {
      int s = spec.sigma[d];
      if (s < 0 || s >= darts) throw PreconditionError("connecting map names an unknown dart");
      int v = g.dart_vertex(d);
      if (g.mu_[v] == -1 || g.dart_vertex(s) != g.mu_[v]) {
        throw PreconditionError("sigma at " + g.vertex_name(v) + " does not land at mu(v)");
      }
      if (spec.sigma[s] != d) {
        throw PreconditionError("sigma_{mu(v)} is not the inverse of sigma_v at " + g.vertex_name(v));
      }
    }
    g.sigma_ = spec.sigma;
  }
  g.spec_ = std::move(spec);
  return g;
}

bool WhiteheadGraph::has_full_involution() const {
  return std::none_of(mu_.begin(), mu_.end(), [](int m) { return m == -1; });
}

int WhiteheadGraph::dart_at(int vertex, int edge) const {
  const Edge& e = edges_.at(edge);
  if (e.u == vertex) return dart_of(edge, 0);
  if (e.v == vertex) return dart_of(edge, 1);
  return -1;
}

std::string WhiteheadGraph::vertex_name(int vertex) const {
  if (vertex >= 0 && vertex < static_cast<int>(spec_.names.size()) &&
      !spec_.names[vertex].empty()) {
    return spec_.names[vertex];
  }
  if (vertex < 2 * rank_) {
    return "a" + std::to_string(vertex / 2 + 1) + ((vertex & 1) ? "-" : "");
  }
  return "v" + std::to_string(vertex);
}

int WhiteheadGraph::vertex_by_name(const std::string& name) const {
  for (int v = 0; v < num_vertices_; ++v) {
    if (vertex_name(v) == name) return v;
  }
  return -1;
}

bool WhiteheadGraph::connected() const {
  if (num_vertices_ == 0) return true;
  std::vector<char> seen(num_vertices_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int d : darts_at(v)) {
      int w = edges_[edge_of_dart(d)].other(v);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == num_vertices_;
}

std::optional<int> WhiteheadGraph::regularity() const {
  if (num_vertices_ == 0) return 0;
  int k = degree(0);
  for (int v = 1; v < num_vertices_; ++v) {
    if (degree(v) != k) return std::nullopt;
  }
  return k;
}

WhiteheadGraph WhiteheadGraph::edge_subgraph(const std::vector<int>& keep) const {
  GraphSpec spec;
  spec.num_vertices = num_vertices_;
  spec.rank = rank_;
  spec.mu = mu_;
  spec.names = spec_.names;
  for (int id : keep) {
    const Edge& e = edge(id);
    spec.endpoints.emplace_back(e.u, e.v);
    spec.provenance.push_back(e.provenance);
  }
  return create(std::move(spec));
}

WhiteheadGraph build_whitehead_graph(const WordList& list) {
  GraphSpec spec;
  spec.rank = list.rank;
  spec.num_vertices = 2 * list.rank;
  std::vector<int> first_edge;
  for (std::size_t j = 0; j < list.words.size(); ++j) {
    const Word& w = list.words[j];
    if (!is_cyclically_reduced(w)) {
      throw PreconditionError("word " + std::to_string(j) + " is not cyclically reduced");
    }
    first_edge.push_back(static_cast<int>(spec.endpoints.size()));
    for (const Subword& s : length2_cyclic_subwords(w)) {
      spec.endpoints.emplace_back(vertex_of(s.first), vertex_of(s.second.inverse()));
      spec.provenance.push_back(Provenance{static_cast<int>(j), static_cast<int>(s.position)});
    }
  }
  // The edge of x_i x_{i+1} meets x_{i+1}^{-1} at its second end; the edge of
  // x_{i+1} x_{i+2} meets x_{i+1} at its first end.
  spec.sigma.assign(2 * spec.endpoints.size(), -1);
  for (std::size_t j = 0; j < list.words.size(); ++j) {
    const int len = static_cast<int>(list.words[j].size());
    for (int i = 0; i < len; ++i) {
      int here = first_edge[j] + i;
      int next = first_edge[j] + (i + 1) % len;
      spec.sigma[dart_of(here, 1)] = dart_of(next, 0);
      spec.sigma[dart_of(next, 0)] = dart_of(here, 1);
    }
  }
  return WhiteheadGraph::create(std::move(spec));
}

int connecting_map(const WhiteheadGraph& graph, int vertex, int dart) {
  if (!graph.has_sigma()) throw PreconditionError("graph carries no connecting maps");
  if (dart < 0 || dart >= 2 * graph.num_edges() || graph.dart_vertex(dart) != vertex) {
    throw PreconditionError("dart " + std::to_string(dart) + " is not incident with " +
                            graph.vertex_name(vertex));
  }
  return graph.sigma(dart);
}

int local_edge_connectivity(const WhiteheadGraph& graph, int x, int y) {
  if (x == y) throw PreconditionError("local edge connectivity needs distinct vertices");
  const int m = graph.num_edges();
  // flow[e] in {-1, 0, 1}: units sent from u to v along edge e.
  std::vector<int> flow(m, 0);
  int total = 0;
  while (true) {
    std::vector<int> via(graph.num_vertices(), -1);
    std::vector<char> seen(graph.num_vertices(), 0);
    std::queue<int> queue;
    queue.push(x);
    seen[x] = 1;
    while (!queue.empty() && !seen[y]) {
      int v = queue.front();
      queue.pop();
      for (int d : graph.darts_at(v)) {
        int e = edge_of_dart(d);
        int w = graph.edge(e).other(v);
        // residual capacity in direction v -> w
        int dir = (d & 1) ? -1 : 1;
        if (flow[e] * dir >= 1) continue;
        if (seen[w]) continue;
        seen[w] = 1;
        via[w] = d;
        queue.push(w);
      }
    }
    if (!seen[y]) return total;
    for (int v = y; v != x;) {
      int d = via[v];
      int e = edge_of_dart(d);
      flow[e] += (d & 1) ? -1 : 1;
      v = graph.edge(e).other(v);
    }
    ++total;
  }
}

AnalysisReport analyze(const WhiteheadGraph& graph) {
  if (!graph.has_full_involution()) {
    throw PreconditionError("analysis needs an involution defined on every vertex");
  }
  AnalysisReport report;
  report.minimal = true;
  for (int v = 0; v < graph.num_vertices(); ++v) {
    VertexReport vr;
    vr.vertex = v;
    vr.degree = graph.degree(v);
    vr.lambda = local_edge_connectivity(graph, v, graph.mu(v));
    report.minimal = report.minimal && vr.lambda == vr.degree;
    report.vertices.push_back(vr);
  }
  report.connected = graph.connected();
  report.diskbusting = report.minimal && report.connected;
  report.k = graph.regularity();
  return report;
}

TraceResult trace_word(const WhiteheadGraph& graph, int start_edge,
                       const std::vector<int>& vertices) {
  if (!graph.has_sigma()) throw PreconditionError("graph carries no connecting maps");
  if (vertices.empty()) throw PreconditionError("empty vertex sequence");
  if (start_edge < 0 || start_edge >= graph.num_edges()) {
    throw PreconditionError("unknown start edge");
  }
  const std::size_t l = vertices.size();
  for (std::size_t i = 0; i < l; ++i) {
    int x = vertices[i];
    int next = vertices[(i + 1) % l];
    if (x < 0 || x >= graph.num_vertices()) throw PreconditionError("unknown vertex in sequence");
    if (l > 1 && next == graph.mu(x)) {
      throw PreconditionError("sequence has x_{i+1} = x_i^{-1} at position " + std::to_string(i + 1));
    }
  }
  TraceResult result;
  result.edges.push_back(start_edge);
  int current = start_edge;
  for (int x : vertices) {
    int at = graph.mu(x);
    int dart = graph.dart_at(at, current);
    if (dart < 0) {
      throw PreconditionError("sigma_" + graph.vertex_name(at) + " is undefined on edge " +
                              std::to_string(current));
    }
    current = edge_of_dart(graph.sigma(dart));
    result.edges.push_back(current);
    if (graph.rank() > 0 && x < 2 * graph.rank()) result.letters.push_back(letter_of(x));
  }
  result.closed = current == start_edge;
  return result;
}

}  // namespace polywit
