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

#ifndef POLYWIT_WITNESS_HPP_
#define POLYWIT_WITNESS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "polywit/exact_lp.hpp"
#include "polywit/whitehead.hpp"

namespace polywit {

// A simple cycle, stored as its edges in cyclic order. vertices[i] is the
// vertex shared by edges[i] and edges[i + 1] (indices mod length). The edge
// sequence is the lexicographically least among all rotations and both
// directions, which makes it a canonical key.
struct Cycle {
  std::vector<int> edges;
  std::vector<int> vertices;

  std::size_t length() const { return edges.size(); }
  bool contains(int edge) const;
  friend bool operator==(const Cycle& a, const Cycle& b) { return a.edges == b.edges; }
};

// Orders cycles by length, then by canonical edge sequence.
struct CycleOrder {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

// Builds the canonical cycle on an edge subset. Throws PreconditionError if
// the edges do not form a connected 2-regular subgraph of `graph`.
Cycle make_cycle(const WhiteheadGraph& graph, std::vector<int> edges);

// A multiset of cycles.
class CycleList {
 public:
  struct Entry {
    Cycle cycle;
    std::int64_t multiplicity = 0;
  };

  void add(const Cycle& cycle, std::int64_t multiplicity = 1);
  // Every multiplicity times `factor`.
  CycleList scaled(std::int64_t factor) const;
  void append(const CycleList& other, std::int64_t copies = 1);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  std::int64_t total() const;
  bool has_long_cycle() const;

  // Entries in canonical order.
  std::vector<Entry> entries() const;
  std::map<int, std::int64_t> edge_usage() const;

 private:
  std::map<std::vector<int>, Entry, CycleOrder> entries_;
};

// All simple cycles, bigons included, in canonical order.
std::vector<Cycle> enumerate_cycles(const WhiteheadGraph& graph);

// (vertex, e, f) with e < f: a pair of distinct edges at a vertex.
using PairKey = std::tuple<int, int, int>;

// Number of cycles (with multiplicity) containing both edges of each pair,
// keyed by the vertex the pair is read at. Zero entries are omitted.
std::map<PairKey, std::int64_t> pair_counts(const CycleList& list);

// The image of a pair under the connecting map at its vertex.
PairKey sigma_image(const WhiteheadGraph& graph, const PairKey& key);

struct Imbalance {
  PairKey pair;
  std::int64_t count = 0;
  PairKey image;
  std::int64_t image_count = 0;
};

struct WitnessVerdict {
  bool pass = false;
  bool balanced = false;
  bool long_cycle_present = false;
  std::vector<Imbalance> failures;
  // Strict mode only: darts whose edge usage differs from their image.
  std::vector<int> unbalanced_darts;
  std::map<int, std::int64_t> per_edge_usage;
};

// Checks the cycle-list condition: every pair {e, f} at v lies in as many
// cycles as {sigma_v(e), sigma_v(f)}. `strict` adds per-edge balance under
// sigma. Throws PreconditionError on an empty list or on cycles foreign to
// the graph.
WitnessVerdict verify_witness(const WhiteheadGraph& graph, const CycleList& list,
                              bool require_long, bool strict = false);

struct FarkasEntry {
  PairKey pair;
  PairKey image;
  Rational value;
};

// Multipliers z on the balance rows with sum_rows z . A_C >= [C counts] for
// every cycle C. Any nonnegative balanced weighting then puts zero weight
// on the counted cycles, so no witness exists.
struct FarkasCertificate {
  bool require_long = false;
  bool strict = false;
  std::vector<FarkasEntry> rows;
  // Strict mode rows, keyed by dart d < sigma(d).
  std::vector<std::pair<int, Rational>> dart_rows;
};

struct LpSearchResult {
  bool feasible = false;
  CycleList witness;
  FarkasCertificate certificate;
  int num_cycles = 0;
  int num_rows = 0;
  int pivots = 0;
};

// Exact LP over cycle weights: balance rows, total weight <= 1, maximize
// weight on long cycles (all cycles when !require_long). A positive optimum
// is scaled to the smallest integer witness; a zero optimum comes with a
// Farkas certificate.
LpSearchResult search_witness_lp(const WhiteheadGraph& graph, bool require_long,
                                 bool strict = false);

// Independent check of a certificate against a fresh cycle enumeration.
bool verify_farkas(const WhiteheadGraph& graph, const FarkasCertificate& certificate);

// Replaces each edge with a path of `length` edges. Internal vertex j of the
// path for edge i (both 1-based) is named v<i>_<j>. With
// `extend_involution`, length must equal the edge count and the involution
// is extended by v_{i,j} <-> v_{j,i-1} for j < i.
WhiteheadGraph subdivide(const WhiteheadGraph& graph, int length, bool extend_involution);

}  // namespace polywit

#endif  // POLYWIT_WITNESS_HPP_
