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

#include <random>

#include "doctest.h"
#include "polywit/builtins.hpp"
#include "polywit/error.hpp"
#include "polywit/generators.hpp"
#include "polywit/pipeline.hpp"

using namespace polywit;

TEST_CASE("fnv-1a reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
  CHECK(hex64(0xabcULL) == "0000000000000abc");
}

TEST_CASE("graph JSON round trip keeps sigma and provenance") {
  std::mt19937_64 rng(8);
  std::vector<WhiteheadGraph> graphs{figure7_graph(), builtin("example-6.1").graph};
  for (int t = 0; t < 10; ++t) graphs.push_back(random_four_vertex(rng, 6));
  for (int t = 0; t < 5; ++t) graphs.push_back(random_k_graph(rng, 6, 3));
  for (const auto& g : graphs) {
    const Json j = graph_to_json(g);
    const WhiteheadGraph back = graph_from_json(Json::parse(j.dump()));
    CHECK(graph_to_json(back) == j);
    CHECK(graph_hash(back) == graph_hash(g));
    CHECK(back.sigma_table() == g.sigma_table());
  }
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"rank":1,"edges":[{"id":0,"u":"a1","v":"a1"}]})")), LoopError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"rank":1,"edges":[{"id":0,"u":"zz","v":"a1"}]})")), ParseError);
}

TEST_CASE("witness and certificate JSON round trip") {
  const Builtin b = builtin("remark-2.4");
  const auto lp = search_witness_lp(b.graph, true);
  REQUIRE(lp.feasible);
  const Json j = witness_to_json(b.graph, lp.witness);
  const CycleList back = witness_from_json(b.graph, Json::parse(j.dump()));
  CHECK(witness_to_json(b.graph, back) == j);
  CHECK(verify_file(b.graph, j, true).pass);
  CHECK_THROWS_AS(witness_from_json(builtin("commutator").graph, j), PreconditionError);

  // dropping a cycle breaks the balance
  Json broken = j;
  broken["cycles"].erase(0);
  if (!broken["cycles"].empty()) CHECK_FALSE(verify_file(b.graph, broken, true).pass);

  const Builtin x = builtin("example-6.1");
  const auto inf = search_witness_lp(x.graph, true);
  REQUIRE_FALSE(inf.feasible);
  const Json cj = infeasible_to_json(x.graph, inf);
  const FarkasCertificate c = farkas_from_json(x.graph, Json::parse(cj.dump()));
  CHECK(verify_farkas(x.graph, c));
  CHECK(verify_file(x.graph, cj, true).refutation);
  // zeroing every multiplier leaves no refutation
  Json zero = cj;
  for (auto& row : zero["farkas"]) row["value"] = "0";
  CHECK_FALSE(verify_file(x.graph, zero, true).refutation);
}

TEST_CASE("auto method selection") {
  CHECK(select_method(builtin("commutator").graph) == Method::kFourVertex);
  CHECK(select_method(builtin("figure-7").graph) == Method::kFourVertex);
  CHECK(select_method(builtin("example-6.1").graph) == Method::kLp);
  std::mt19937_64 rng(4);
  CHECK(select_method(random_k_graph(rng, 6, 3)) == Method::kRegular);
  CHECK(parse_method("lp") == Method::kLp);
  CHECK_THROWS_AS(parse_method("magic"), PreconditionError);
}

TEST_CASE("pipeline output is deterministic") {
  for (const auto& name : builtin_names()) {
    const Instance a = load_instance(name);
    const Instance b = load_instance(name);
    const auto wa = find_witness(a.graph, Method::kAuto, true);
    const auto wb = find_witness(b.graph, Method::kAuto, true);
    CHECK(wa.json.dump() == wb.json.dump());
    if (wa.feasible) CHECK(verify_file(a.graph, wa.json, true).pass);
  }
}

TEST_CASE("DOT exports") {
  const Builtin b = builtin("commutator");
  const std::string dot = graph_to_dot(b.graph);
  CHECK(dot.find("\"a1\" -- \"a2-\" [label=\"w0:p0\"]") != std::string::npos);
  const auto table = sigma_table_json(b.graph);
  CHECK(table.size() == 8);
  const AuxDigraph d = build_auxiliary_digraph(figure7_graph(), 0);
  const std::string ddot = aux_digraph_to_dot(d);
  CHECK(ddot.find("n7 -> n0;") != std::string::npos);
  CHECK(ddot.find("fillcolor=red") != std::string::npos);
}
