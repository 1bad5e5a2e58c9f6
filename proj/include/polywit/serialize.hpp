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

#ifndef POLYWIT_SERIALIZE_HPP_
#define POLYWIT_SERIALIZE_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "polywit/fourvertex.hpp"
#include "polywit/regular.hpp"
#include "polywit/surface.hpp"
#include "polywit/whitehead.hpp"
#include "polywit/witness.hpp"

namespace polywit {

using Json = nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

// Hash of the canonical graph JSON (edges, involution, connecting maps).
std::string graph_hash(const WhiteheadGraph& graph);

// {rank, vertices, edges:[{id, u, v}], mu, sigma:{vertex:{edge: edge}}}.
// sigma maps an edge at `vertex` to its image edge at mu(vertex).
Json graph_to_json(const WhiteheadGraph& graph);
// Accepts vertex names or integer ids for u, v and the sigma keys. `mu`
// defaults to a_i <-> a_i^-1.
WhiteheadGraph graph_from_json(const Json& j);

Json analysis_to_json(const WhiteheadGraph& graph, const AnalysisReport& report);

Json witness_to_json(const WhiteheadGraph& graph, const CycleList& witness);
// Throws PreconditionError when the recorded graph hash does not match.
CycleList witness_from_json(const WhiteheadGraph& graph, const Json& j);

Json infeasible_to_json(const WhiteheadGraph& graph, const LpSearchResult& result);
FarkasCertificate farkas_from_json(const WhiteheadGraph& graph, const Json& j);

Json coloring_to_json(const FractionalColoring& coloring);

// Witness JSON plus {c1, c2, constants_per_level}.
Json good_list_to_json(const WhiteheadGraph& graph, const FourVertexResult& result);

Json certificate_to_json(const std::string& witness_hash, const SurfaceReport& report, int rank);

// {"<edge>:<vertex>": "<edge>:<vertex>"}: sigma keyed by edge end.
Json sigma_table_json(const WhiteheadGraph& graph);

// Vertices named a1, a1-, ...; edges labelled w<j>:p<i> when they come from
// a word, e<id> otherwise.
std::string graph_to_dot(const WhiteheadGraph& graph);
// The auxiliary digraph with colored nodes; completion arcs dashed.
std::string aux_digraph_to_dot(const AuxDigraph& d, const Completion* completion = nullptr);

}  // namespace polywit

#endif  // POLYWIT_SERIALIZE_HPP_
