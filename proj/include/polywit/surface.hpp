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

#ifndef POLYWIT_SURFACE_HPP_
#define POLYWIT_SURFACE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polywit/whitehead.hpp"
#include "polywit/witness.hpp"
#include "polywit/words.hpp"

namespace polywit {

// A total order on the darts at each vertex, compatible with the connecting
// maps: d < d' at v iff sigma(d) < sigma(d') at mu(v). Edge-id order at the
// lower vertex of each {v, mu(v)}, transported through sigma.
struct LinearOrders {
  std::vector<int> rank;  // per dart

  bool precedes(const WhiteheadGraph& g, int v, int e, int f) const {
    return rank[g.dart_at(v, e)] < rank[g.dart_at(v, f)];
  }
};

LinearOrders sigma_compatible_orders(const WhiteheadGraph& graph);

// Side j of a polygon joins corners j and j+1; corner k is dual to the
// source cycle's edge k, side j to the cycle's vertex j.
struct Side {
  int vertex = -1;  // graph vertex; its generator is the label's first part
  int e = -1;       // cycle edge at corner j
  int f = -1;       // cycle edge at corner j+1
  bool incoming = false;
  // Internal orientation: from the corner of the later edge in the order at
  // `vertex` to the corner of the earlier one.
  int from_corner = -1;
  int to_corner = -1;

  int generator() const { return vertex / 2 + 1; }
};

struct DualPolygon {
  int id = 0;
  int source_entry = 0;  // index into witness.entries()
  Cycle cycle;
  std::vector<Side> sides;
};

struct SideRef {
  int polygon = -1;
  int side = -1;
  friend auto operator<=>(const SideRef&, const SideRef&) = default;
};

struct SurfaceComplex {
  WhiteheadGraph graph;
  LinearOrders orders;
  std::vector<DualPolygon> polygons;
  // partner[polygon][side]
  std::vector<std::vector<SideRef>> partner;
  // corner_class[polygon][corner]: the glued vertex q
  std::vector<std::vector<int>> corner_class;
  int nu = 0;    // vertices of S0
  int eta = 0;   // edges of S0
  int zeta = 0;  // faces of S0

  int chi_s0() const { return nu - eta + zeta; }
};

// One polygon per cycle copy, sides paired greedily within each label class.
// Throws PreconditionError unless the witness passes verify_witness on a
// graph with connecting maps and generator labels; InternalError when the
// pairing cannot be completed.
SurfaceComplex build_surface(const WhiteheadGraph& graph, const CycleList& witness);

// Checks `partner` (involutive, incoming with outgoing, labels related by
// sigma, orientations respected) and recomputes the glued vertices and the
// counts. build_surface calls this; tests use it after corrupting a pairing.
void glue(SurfaceComplex& complex);

struct BoundaryWord {
  int vertex = -1;            // glued vertex q
  std::vector<Letter> letters;
  std::vector<int> edges;     // f_0, f_1, ... around the link
  std::vector<int> crossed;   // graph vertex of each side crossed
  std::optional<PowerMatch> match;
};

// Walks the link of every glued vertex and reads w_q. Throws InternalError
// when the link does not close up over exactly the corners of q.
std::vector<BoundaryWord> boundary_words(const SurfaceComplex& complex, const WordList& list);

struct SurfaceReport {
  int m = 0;
  int chi_s_minus_m = 0;
  int chi_s_doubleprime = 0;
  bool orientable = false;
  std::optional<int> genus;  // of S'', when orientable
  std::vector<BoundaryWord> boundary;
  std::vector<int> assignment;            // word index per glued vertex
  std::vector<int> exponents;             // c with w_q = u_j^c
  std::map<int, std::int64_t> positive_degrees;
};

// `partition` assigns a word index to each glued vertex; nullopt picks the
// natural one (the word the corner edges came from). Throws
// PreconditionError when a boundary word fails, when the partition does not
// fit, or when chi(S) - m >= 0.
SurfaceReport surface_report(const SurfaceComplex& complex, const WordList& list,
                             const std::optional<std::vector<int>>& partition = std::nullopt);

// Polygon orientations propagated across the gluing.
bool orientable(const SurfaceComplex& complex);

}  // namespace polywit

#endif  // POLYWIT_SURFACE_HPP_
