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

#include "polywit/witness.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "polywit/error.hpp"

namespace polywit {
namespace {

std::vector<int> canonical_rotation(const std::vector<int>& seq) {
  const std::size_t n = seq.size();
  std::vector<int> best = seq;
  std::vector<int> candidate(n);
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t i = 0; i < n; ++i) {
        candidate[i] = dir == 0 ? seq[(r + i) % n] : seq[(r + n - i) % n];
      }
      if (candidate < best) best = candidate;
    }
  }
  return best;
}

int shared_vertex(const Edge& a, const Edge& b) {
  if (a.u == b.u || a.u == b.v) return a.u;
  return a.v;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw InternalError("multiplicity overflow");
  return out;
}

PairKey make_key(int v, int e, int f) { return {v, std::min(e, f), std::max(e, f)}; }

// Balance rows of the witness condition. Each row equates the count of a
// representative pair with the count of its sigma image.
struct BalanceSystem {
  std::map<PairKey, int> row_of;  // representative pair -> row
  std::vector<PairKey> reps;
  std::vector<int> dart_reps;     // strict mode: dart d < sigma(d)

  BalanceSystem(const WhiteheadGraph& graph, bool strict) {
    for (int v = 0; v < graph.num_vertices(); ++v) {
      const auto& darts = graph.darts_at(v);
      for (std::size_t i = 0; i < darts.size(); ++i) {
        for (std::size_t j = i + 1; j < darts.size(); ++j) {
          PairKey key = make_key(v, edge_of_dart(darts[i]), edge_of_dart(darts[j]));
          if (key < sigma_image(graph, key)) {
            row_of.emplace(key, static_cast<int>(reps.size()));
            reps.push_back(key);
          }
        }
      }
    }
    if (strict) {
      for (int d = 0; d < 2 * graph.num_edges(); ++d) {
        if (d < graph.sigma(d)) dart_reps.push_back(d);
      }
    }
  }

  int num_rows() const { return static_cast<int>(reps.size() + dart_reps.size()); }

  // Sparse column of a cycle over the balance rows.
  std::map<int, int> column(const WhiteheadGraph& graph, const Cycle& c) const {
    std::map<int, int> col;
    const std::size_t n = c.length();
    for (std::size_t i = 0; i < n; ++i) {
      PairKey key = make_key(c.vertices[i], c.edges[i], c.edges[(i + 1) % n]);
      if (auto it = row_of.find(key); it != row_of.end()) {
        col[it->second] += 1;
      } else {
        col[row_of.at(sigma_image(graph, key))] -= 1;
      }
    }
    const int base = static_cast<int>(reps.size());
    for (std::size_t r = 0; r < dart_reps.size(); ++r) {
      int d = dart_reps[r];
      int delta = (c.contains(edge_of_dart(d)) ? 1 : 0) -
                  (c.contains(edge_of_dart(graph.sigma(d))) ? 1 : 0);
      if (delta != 0) col[base + static_cast<int>(r)] += delta;
    }
    std::erase_if(col, [](const auto& kv) { return kv.second == 0; });
    return col;
  }
};

}  // namespace

bool Cycle::contains(int edge) const {
  return std::find(edges.begin(), edges.end(), edge) != edges.end();
}

Cycle make_cycle(const WhiteheadGraph& graph, std::vector<int> edges) {
  if (edges.size() < 2) throw PreconditionError("a cycle needs at least two edges");
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw PreconditionError("cycle repeats an edge");
  }
  std::map<int, std::vector<int>> at;
  for (int e : edges) {
    if (e < 0 || e >= graph.num_edges()) {
      throw PreconditionError("cycle uses unknown edge " + std::to_string(e));
    }
    at[graph.edge(e).u].push_back(e);
    at[graph.edge(e).v].push_back(e);
  }
  for (const auto& [v, incident] : at) {
    if (incident.size() != 2) {
      throw PreconditionError("edges do not form a cycle: vertex " + graph.vertex_name(v) +
                              " has degree " + std::to_string(incident.size()));
    }
  }
  std::vector<int> walk{edges.front()};
  int vertex = graph.edge(edges.front()).v;
  while (true) {
    const auto& incident = at[vertex];
    int next = incident[0] == walk.back() ? incident[1] : incident[0];
    if (next == walk.front()) break;
    walk.push_back(next);
    vertex = graph.edge(next).other(vertex);
  }
  if (walk.size() != edges.size()) throw PreconditionError("edges do not form a connected cycle");

  Cycle c;
  c.edges = canonical_rotation(walk);
  const std::size_t n = c.edges.size();
  if (n == 2) {
    c.vertices = {graph.edge(c.edges[0]).v, graph.edge(c.edges[0]).u};
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      c.vertices.push_back(shared_vertex(graph.edge(c.edges[i]), graph.edge(c.edges[(i + 1) % n])));
    }
  }
  return c;
}

void CycleList::add(const Cycle& cycle, std::int64_t multiplicity) {
  if (multiplicity <= 0) throw PreconditionError("multiplicities must be positive");
  auto [it, inserted] = entries_.try_emplace(cycle.edges, Entry{cycle, 0});
  if (__builtin_add_overflow(it->second.multiplicity, multiplicity, &it->second.multiplicity)) {
    throw InternalError("multiplicity overflow");
  }
}

CycleList CycleList::scaled(std::int64_t factor) const {
  CycleList out;
  for (const auto& [key, entry] : entries_) out.add(entry.cycle, checked_mul(entry.multiplicity, factor));
  return out;
}

void CycleList::append(const CycleList& other, std::int64_t copies) {
  if (copies == 0) return;
  for (const auto& [key, entry] : other.entries_) add(entry.cycle, checked_mul(entry.multiplicity, copies));
}

std::int64_t CycleList::total() const {
  std::int64_t t = 0;
  for (const auto& [key, entry] : entries_) t += entry.multiplicity;
  return t;
}

bool CycleList::has_long_cycle() const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [](const auto& kv) { return kv.second.cycle.length() >= 3; });
}

std::vector<CycleList::Entry> CycleList::entries() const {
  std::vector<Entry> out;
  for (const auto& [key, entry] : entries_) out.push_back(entry);
  return out;
}

std::map<int, std::int64_t> CycleList::edge_usage() const {
  std::map<int, std::int64_t> usage;
  for (const auto& [key, entry] : entries_) {
    for (int e : entry.cycle.edges) usage[e] += entry.multiplicity;
  }
  return usage;
}

std::vector<Cycle> enumerate_cycles(const WhiteheadGraph& graph) {
  std::set<std::vector<int>> seen;
  const int n = graph.num_vertices();
  std::vector<char> on_path(n, 0);
  std::vector<int> path_edges;

  // Simple paths from `start` through vertices above it; closing back at
  // `start` gives each cycle once per direction.
  auto dfs = [&](auto&& self, int start, int vertex) -> void {
    for (int d : graph.darts_at(vertex)) {
      int e = edge_of_dart(d);
      if (!path_edges.empty() && e == path_edges.back()) continue;
      int next = graph.edge(e).other(vertex);
      if (next == start) {
        if (path_edges.empty()) continue;
        std::vector<int> key = path_edges;
        key.push_back(e);
        std::sort(key.begin(), key.end());
        seen.insert(key);
        continue;
      }
      if (next < start || on_path[next]) continue;
      on_path[next] = 1;
      path_edges.push_back(e);
      self(self, start, next);
      path_edges.pop_back();
      on_path[next] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    on_path[s] = 1;
    dfs(dfs, s, s);
    on_path[s] = 0;
  }
  std::vector<Cycle> cycles;
  for (const auto& edges : seen) cycles.push_back(make_cycle(graph, edges));
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) { return CycleOrder{}(a.edges, b.edges); });
  return cycles;
}

std::map<PairKey, std::int64_t> pair_counts(const CycleList& list) {
  std::map<PairKey, std::int64_t> counts;
  for (const auto& entry : list.entries()) {
    const Cycle& c = entry.cycle;
    const std::size_t n = c.length();
    for (std::size_t i = 0; i < n; ++i) {
      counts[make_key(c.vertices[i], c.edges[i], c.edges[(i + 1) % n])] += entry.multiplicity;
    }
  }
  return counts;
}

PairKey sigma_image(const WhiteheadGraph& graph, const PairKey& key) {
  auto [v, e, f] = key;
  int de = graph.dart_at(v, e);
  int df = graph.dart_at(v, f);
  if (de < 0 || df < 0) throw PreconditionError("pair is not incident with its vertex");
  return make_key(graph.mu(v), edge_of_dart(graph.sigma(de)), edge_of_dart(graph.sigma(df)));
}

WitnessVerdict verify_witness(const WhiteheadGraph& graph, const CycleList& list,
                              bool require_long, bool strict) {
  if (!graph.has_sigma()) throw PreconditionError("graph carries no connecting maps");
  if (list.empty()) throw PreconditionError("a witness must be a nonempty list of cycles");
  for (const auto& entry : list.entries()) {
    if (make_cycle(graph, entry.cycle.edges) != entry.cycle) {
      throw PreconditionError("cycle is not a canonical cycle of this graph");
    }
  }
  WitnessVerdict verdict;
  verdict.per_edge_usage = list.edge_usage();
  verdict.long_cycle_present = list.has_long_cycle();

  const auto counts = pair_counts(list);
  auto count_of = [&](const PairKey& k) -> std::int64_t {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  };
  for (const auto& [key, count] : counts) {
    PairKey image = sigma_image(graph, key);
    std::int64_t image_count = count_of(image);
    if (count != image_count && (image_count == 0 || key < image)) {
      verdict.failures.push_back({key, count, image, image_count});
    }
  }
  if (strict) {
    auto usage = [&](int e) {
      auto it = verdict.per_edge_usage.find(e);
      return it == verdict.per_edge_usage.end() ? std::int64_t{0} : it->second;
    };
    for (int d = 0; d < 2 * graph.num_edges(); ++d) {
      int s = graph.sigma(d);
      if (d < s && usage(edge_of_dart(d)) != usage(edge_of_dart(s))) verdict.unbalanced_darts.push_back(d);
    }
  }
  verdict.balanced = verdict.failures.empty() && verdict.unbalanced_darts.empty();
  verdict.pass = verdict.balanced && (!require_long || verdict.long_cycle_present);
  return verdict;
}

LpSearchResult search_witness_lp(const WhiteheadGraph& graph, bool require_long, bool strict) {
  if (!graph.has_sigma()) throw PreconditionError("graph carries no connecting maps");
  const std::vector<Cycle> cycles = enumerate_cycles(graph);
  const BalanceSystem system(graph, strict);
  const int num_cycles = static_cast<int>(cycles.size());
  const int rows = system.num_rows();

  LpProblem lp;
  lp.num_vars = num_cycles + 1;  // last column: slack of the total-weight row
  lp.rows.resize(static_cast<std::size_t>(rows) + 1);
  lp.rhs.assign(static_cast<std::size_t>(rows) + 1, Rational(0));
  lp.cost.assign(static_cast<std::size_t>(lp.num_vars), Rational(0));
  for (int c = 0; c < num_cycles; ++c) {
    for (const auto& [row, coef] : system.column(graph, cycles[c])) {
      lp.rows[row].emplace_back(c, Rational(coef));
    }
    lp.rows[rows].emplace_back(c, Rational(1));
    if (!require_long || cycles[c].length() >= 3) lp.cost[c] = -1;
  }
  lp.rows[rows].emplace_back(num_cycles, Rational(1));
  lp.rhs[rows] = 1;

  const LpResult solved = solve_lp(lp);
  if (solved.status != LpStatus::kOptimal) throw InternalError("witness LP is bounded and feasible by construction");

  LpSearchResult result;
  result.num_cycles = num_cycles;
  result.num_rows = rows;
  result.pivots = solved.pivots;
  if (sgn(solved.objective) < 0) {
    std::vector<Rational> weights(solved.x.begin(), solved.x.begin() + num_cycles);
    mpz_class scale = denominator_lcm(weights);
    mpz_class g = 0;
    std::vector<mpz_class> ints;
    for (const Rational& w : weights) {
      Rational scaled = w * scale;
      ints.push_back(scaled.get_num());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    for (int c = 0; c < num_cycles; ++c) {
      if (sgn(ints[c]) > 0) result.witness.add(cycles[c], to_int64(ints[c] / g));
    }
    if (!verify_witness(graph, result.witness, require_long, strict).pass) {
      throw InternalError("LP solution failed witness verification");
    }
    result.feasible = true;
    return result;
  }

  result.certificate.require_long = require_long;
  result.certificate.strict = strict;
  for (std::size_t r = 0; r < system.reps.size(); ++r) {
    Rational z = -solved.duals[r];
    if (sgn(z) != 0) {
      result.certificate.rows.push_back({system.reps[r], sigma_image(graph, system.reps[r]), z});
    }
  }
  for (std::size_t r = 0; r < system.dart_reps.size(); ++r) {
    Rational z = -solved.duals[system.reps.size() + r];
    if (sgn(z) != 0) result.certificate.dart_rows.emplace_back(system.dart_reps[r], z);
  }
  if (!verify_farkas(graph, result.certificate)) {
    throw InternalError("LP dual failed certificate verification");
  }
  return result;
}

bool verify_farkas(const WhiteheadGraph& graph, const FarkasCertificate& certificate) {
  if (!graph.has_sigma()) return false;
  std::map<PairKey, Rational> z;
  for (const auto& row : certificate.rows) {
    auto [v, e, f] = row.pair;
    if (graph.dart_at(v, e) < 0 || graph.dart_at(v, f) < 0 || e >= f) return false;
    if (sigma_image(graph, row.pair) != row.image) return false;
    // A row and its mirror carry opposite signs.
    z[row.pair] += row.value;
    z[row.image] -= row.value;
  }
  std::map<int, Rational> dart_z;
  for (const auto& [d, value] : certificate.dart_rows) {
    if (d < 0 || d >= 2 * graph.num_edges()) return false;
    dart_z[d] += value;
    dart_z[graph.sigma(d)] -= value;
  }
  for (const Cycle& c : enumerate_cycles(graph)) {
    Rational lhs = 0;
    const std::size_t n = c.length();
    for (std::size_t i = 0; i < n; ++i) {
      if (auto it = z.find(make_key(c.vertices[i], c.edges[i], c.edges[(i + 1) % n])); it != z.end()) {
        lhs += it->second;
      }
    }
    for (const auto& [d, value] : dart_z) {
      if (c.contains(edge_of_dart(d))) lhs += value;
    }
    const bool counted = !certificate.require_long || c.length() >= 3;
    if (lhs < (counted ? 1 : 0)) return false;
  }
  return true;
}

WhiteheadGraph subdivide(const WhiteheadGraph& graph, int length, bool extend_involution) {
  if (length < 1) throw PreconditionError("subdivision length must be at least 1");
  const int m = graph.num_edges();
  if (extend_involution && length != m) {
    throw PreconditionError("extending the involution needs length = |E| = " + std::to_string(m));
  }
  if (length == 1) return graph;
  const int n = graph.num_vertices();
  const int inner = length - 1;
  auto internal = [&](int i, int j) { return n + (i - 1) * inner + (j - 1); };  // 1-based i, j

  GraphSpec spec;
  spec.num_vertices = n + m * inner;
  spec.rank = graph.rank();
  spec.names.resize(static_cast<std::size_t>(spec.num_vertices));
  for (int v = 0; v < n; ++v) spec.names[v] = graph.vertex_name(v);
  spec.mu.assign(static_cast<std::size_t>(spec.num_vertices), -1);
  for (int v = 0; v < n; ++v) spec.mu[v] = graph.mu(v);
  for (const Edge& e : graph.edges()) {
    const int i = e.id + 1;
    int prev = e.u;
    for (int j = 1; j <= inner; ++j) {
      spec.names[internal(i, j)] = "v" + std::to_string(i) + "_" + std::to_string(j);
      spec.endpoints.emplace_back(prev, internal(i, j));
      spec.provenance.push_back(e.provenance);
      prev = internal(i, j);
    }
    spec.endpoints.emplace_back(prev, e.v);
    spec.provenance.push_back(e.provenance);
  }
  if (extend_involution) {
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j < i; ++j) {
        spec.mu[internal(i, j)] = internal(j, i - 1);
        spec.mu[internal(j, i - 1)] = internal(i, j);
      }
    }
  }
  WhiteheadGraph out = WhiteheadGraph::create(std::move(spec));
  if (extend_involution && !out.has_full_involution()) {
    throw InternalError("extended involution is not defined everywhere");
  }
  return out;
}

}  // namespace polywit
