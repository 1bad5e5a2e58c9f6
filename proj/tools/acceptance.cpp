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

// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "digraph_oracle.hpp"
#include "polywit/builtins.hpp"
#include "polywit/error.hpp"
#include "polywit/fourvertex.hpp"
#include "polywit/generators.hpp"
#include "polywit/pipeline.hpp"
#include "polywit/regular.hpp"
#include "polywit/surface.hpp"

using namespace polywit;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "failed: " << what << "; ";
    pass = pass && ok;
  }
};

bool constant_usage(const CycleList& w, int num_edges) {
  const auto usage = w.edge_usage();
  if (static_cast<int>(usage.size()) != num_edges) return false;
  std::set<std::int64_t> values;
  for (auto [e, k] : usage) values.insert(k);
  return values.size() == 1;
}

// Counted from the cycles' edge sets: cycles containing each pair of
// distinct edges at a vertex.
std::map<std::tuple<int, int, int>, std::int64_t> pair_usage(const WhiteheadGraph& g, const CycleList& w) {
  std::map<std::tuple<int, int, int>, std::int64_t> out;
  for (const auto& entry : w.entries()) {
    const std::set<int> in(entry.cycle.edges.begin(), entry.cycle.edges.end());
    for (int v = 0; v < g.num_vertices(); ++v) {
      const auto& darts = g.darts_at(v);
      for (std::size_t i = 0; i < darts.size(); ++i) {
        for (std::size_t j = i + 1; j < darts.size(); ++j) {
          const int e = edge_of_dart(darts[i]), f = edge_of_dart(darts[j]);
          out[{v, e, f}] += (in.count(e) && in.count(f)) ? entry.multiplicity : 0;
        }
      }
    }
  }
  return out;
}

void criterion_1(Outcome& o) {
  const Builtin b = builtin("example-6.1");
  const int a = 0, a_inv = 1;
  const int lambda = local_edge_connectivity(b.graph, a, a_inv);
  o.require(lambda == 3, "lambda(a, a^-1) = 3");
  o.require(b.graph.degree(a) == 4, "deg(a) = 4");
  const auto lp = search_witness_lp(b.graph, true);
  o.require(!lp.feasible, "LP infeasible");
  o.require(!lp.certificate.rows.empty(), "dual certificate present");
  o.require(verify_farkas(b.graph, lp.certificate), "certificate verified");
  o.detail << "lambda=" << lambda << " deg=" << b.graph.degree(a) << " cycles=" << lp.num_cycles
           << " multipliers=" << lp.certificate.rows.size();
}

void criterion_2(Outcome& o) {
  const Builtin non = builtin("remark-2.4-nonminimal");
  const auto rn = analyze(non.graph);
  const int b = 2, b_inv = 3;
  o.require(!rn.minimal, "abab^2ab^3 non-minimal");
  o.require(local_edge_connectivity(non.graph, b, b_inv) == 3 && non.graph.degree(b) == 6, "lambda(b, b^-1) = 3 < 6");

  const Instance inst = load_instance("remark-2.4");
  const auto r = analyze(inst.graph);
  o.require(r.minimal && r.diskbusting, "ab^-1a^2b minimal and diskbusting");
  for (Method m : {Method::kFourVertex, Method::kLp}) {
    const WitnessOutcome w = find_witness(inst.graph, m, true);
    o.require(w.feasible, method_name(m) + " witness found");
    o.require(verify_witness(inst.graph, w.witness, true).pass, method_name(m) + " witness verified");
    const Json cert = surface_certificate(inst, w.witness, m);
    const int chi = cert.at("chi_S_minus_m").get<int>();
    o.require(chi < 0, method_name(m) + " certificate chi(S) - m < 0");
    o.detail << method_name(m) << ": chi(S)-m=" << chi << " ";
  }
  o.detail << "lambda(b,b^-1)=3 deg(b)=6";
}

// Seeded corpus of random k-regular graphs satisfying the lambda condition.
std::vector<std::pair<WhiteheadGraph, int>> kgraph_corpus() {
  Rng rng(20260301);
  std::vector<std::pair<WhiteheadGraph, int>> out;
  const std::pair<int, int> shapes[] = {{2, 2}, {4, 2}, {6, 2}, {8, 2}, {2, 3}, {4, 3}, {6, 3},
                                        {8, 3}, {2, 4}, {4, 4}, {6, 4}, {8, 4}};
  for (int round = 0; round < 10; ++round) {
    for (auto [n, k] : shapes) out.emplace_back(random_k_graph(rng, n, k), k);
  }
  return out;
}

void criterion_3(Outcome& o) {
  const auto corpus = kgraph_corpus();
  for (const auto& [g, k] : corpus) {
    const RegularWitness w = regular_witness(g);
    o.require(verify_witness(g, w.cycles, false).pass, "regular witness verified");
    const std::int64_t ell = w.coloring.ell;
    const std::int64_t q = ell / k;
    o.require(ell % k == 0, "k divides ell");
    for (auto [e, used] : w.cycles.edge_usage()) o.require(used == q * (ell - q), "per-edge usage (l/k)(l - l/k)");
    o.require(static_cast<int>(w.cycles.edge_usage().size()) == g.num_edges(), "every edge used");
    for (auto [key, used] : pair_usage(g, w.cycles)) o.require(used == q * q, "per-pair usage (l/k)^2");
  }
  o.require(corpus.size() >= 100, "at least 100 instances");
  o.detail << corpus.size() << " k-graphs, k in {2,3,4}, n <= 8";
}

void criterion_4(Outcome& o) {
  int counterexamples = 0;
  const auto corpus = kgraph_corpus();
  for (const auto& [g, k] : corpus) counterexamples += !is_k_graph(g).is_k_graph;
  // a wider corpus for the structural property alone
  Rng rng(4242);
  int extra = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = 2 * (1 + static_cast<int>(rng() % 5));
    const int k = 2 + static_cast<int>(rng() % 4);
    counterexamples += !is_k_graph(random_k_graph(rng, n, k)).is_k_graph;
    ++extra;
  }
  o.require(counterexamples == 0, "every generated instance is a k-graph");
  o.detail << corpus.size() + extra << " instances (n <= 10, k <= 5), " << counterexamples << " counterexamples";
}

void criterion_5(Outcome& o) {
  Rng rng(5707);
  int ok = 0, inductive = 0;
  for (int t = 0; t < 120; ++t) {
    const WhiteheadGraph g = random_four_vertex(rng, 6);
    const FourVertexResult r = four_vertex_witness(g);
    o.require(!r.used_lp_fallback, "inductive construction used");
    o.require(verify_witness(g, r.witness, true).pass, "witness verified with require_long");
    o.require(constant_usage(r.witness, g.num_edges()), "constant per-edge usage");
    o.require(search_witness_lp(g, true).feasible, "LP confirms feasibility");
    inductive += r.good.levels.size() > 1;
    ++ok;
  }
  o.detail << ok << " instances, " << inductive << " needed edge removals";
}

void criterion_6(Outcome& o) {
  int digraphs = 0, parts_checked = 0;
  for (int m = 1; m <= 4; ++m) {
    oracle::for_each_labelled_digraph(m, [&](const auto& arcs, const auto& colors) {
      const auto raw = oracle::raw_components(m, arcs, colors);
      std::vector<oracle::Kind> kinds;
      for (const auto& c : raw) kinds.push_back(c.kind);
      if (!oracle::admissible(kinds)) return;
      ++digraphs;
      const AuxDigraph d = make_aux_digraph(m, arcs, colors);
      const auto comps = components(d);
      std::vector<int> to_raw(comps.size(), -1);
      for (std::size_t i = 0; i < comps.size(); ++i) {
        auto nodes = comps[i].nodes;
        std::sort(nodes.begin(), nodes.end());
        for (std::size_t k = 0; k < raw.size(); ++k) {
          if (raw[k].nodes == nodes) to_raw[i] = static_cast<int>(k);
        }
      }
      o.require(std::count(to_raw.begin(), to_raw.end(), -1) == 0 && comps.size() == raw.size(), "components agree");
      const auto parts = decompose_good(d);
      for (const auto& p : parts) {
        o.require(matches_type(d, comps, p) && part_is_good(d, comps, p.components), "part validates against its type");
        ++parts_checked;
      }
      bool found = false;
      for (const auto& candidate : oracle::valid_partitions(kinds)) {
        if (candidate.size() != parts.size()) continue;
        bool same = true;
        for (const auto& part : parts) {
          std::vector<int> members;
          for (int ci : part.components) members.push_back(to_raw[ci]);
          std::sort(members.begin(), members.end());
          same = same && std::any_of(candidate.begin(), candidate.end(), [&](const oracle::Block& b) {
                   return b.members == members && b.types.count(part.type) == 1;
                 });
        }
        found = found || same;
      }
      o.require(found, "brute-force search confirms the partition");
    });
  }
  o.detail << digraphs << " good digraphs (<= 8 nodes), " << parts_checked << " parts";
}

void criterion_7(Outcome& o) {
  const Instance inst = load_instance("commutator");
  const WitnessOutcome w = find_witness(inst.graph, Method::kAuto, true);
  const auto entries = w.witness.entries();
  o.require(entries.size() == 1 && entries[0].cycle.length() == 4 && entries[0].multiplicity == 1, "witness {4-cycle x1}");
  const Json cert = surface_certificate(inst, w.witness, Method::kAuto);
  o.require(cert.at("chi_S_minus_m") == -1, "chi(S) - m = -1");
  o.require(cert.at("chi_S_doubleprime") == -2, "chi(S'') = -2");
  o.detail << "eta=" << cert.at("eta") << " zeta=" << cert.at("zeta") << " chi(S)-m=" << cert.at("chi_S_minus_m")
           << " chi(S'')=" << cert.at("chi_S_doubleprime");
}

void criterion_8(Outcome& o) {
  Rng rng(88);
  int sigma_checked = 0, homogeneity = 0, euler = 0, roundtrip = 0;
  std::vector<WhiteheadGraph> graphs;
  for (int t = 0; t < 40; ++t) graphs.push_back(build_whitehead_graph(random_word_list(rng, 2 + t % 2, 1 + t % 3, 8)));
  for (int t = 0; t < 40; ++t) graphs.push_back(random_four_vertex(rng, 6));
  for (int t = 0; t < 20; ++t) graphs.push_back(random_k_graph(rng, 6, 3));
  for (const auto& g : graphs) {
    for (int d = 0; d < 2 * g.num_edges(); ++d) {
      o.require(g.sigma(g.sigma(d)) == d, "sigma_mu(v) o sigma_v = id");
      o.require(g.dart_vertex(g.sigma(d)) == g.mu(g.dart_vertex(d)), "sigma lands at mu(v)");
      ++sigma_checked;
    }
  }
  for (int t = 0; t < 80; ++t) {
    const WordList list = random_word_list(rng, 2, 1 + static_cast<int>(rng() % 2), 7);
    const WhiteheadGraph g = build_whitehead_graph(list);
    const auto lp = search_witness_lp(g, true);
    if (!lp.feasible) {
      const Json cj = infeasible_to_json(g, lp);
      o.require(verify_file(g, Json::parse(cj.dump()), true).refutation, "certificate round trip");
      ++roundtrip;
      continue;
    }
    const Json wj = witness_to_json(g, lp.witness);
    o.require(verify_file(g, Json::parse(wj.dump()), true).pass, "witness round trip");
    ++roundtrip;
    for (std::int64_t k : {2, 3, 7}) {
      o.require(verify_witness(g, lp.witness.scaled(k), true).pass, "scaled witness verified");
      ++homogeneity;
    }
    // a random cycle list is balanced iff its multiple is
    const auto cycles = enumerate_cycles(g);
    CycleList random_list;
    for (const auto& c : cycles) {
      if (rng() % 3 == 0) random_list.add(c, 1 + static_cast<std::int64_t>(rng() % 3));
    }
    if (!random_list.empty()) {
      o.require(verify_witness(g, random_list, false).pass == verify_witness(g, random_list.scaled(4), false).pass,
                "homogeneity on arbitrary lists");
      ++homogeneity;
    }
    const SurfaceComplex sc = build_surface(g, lp.witness);
    std::set<int> classes;
    int sides = 0;
    for (const auto& p : sc.polygons) {
      sides += static_cast<int>(p.sides.size());
      classes.insert(sc.corner_class[p.id].begin(), sc.corner_class[p.id].end());
    }
    const int nu = static_cast<int>(classes.size());
    const int eta = sides / 2;
    const int zeta = static_cast<int>(sc.polygons.size());
    const SurfaceReport r = surface_report(sc, list);
    o.require(nu - eta + zeta == sc.chi_s0(), "nu - eta + zeta = chi(S0)");
    o.require(r.chi_s_minus_m == -eta + zeta, "chi(S) - m = -eta + zeta");
    o.require(r.m == nu, "one polygon of S per vertex of S0");
    ++euler;
  }
  o.detail << sigma_checked << " darts, " << homogeneity << " scalings, " << euler << " surfaces, " << roundtrip
           << " round trips";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "lambda-deficient word refuted", 5, criterion_1},
      {2, "basis-change pair", 5, criterion_2},
      {3, "regular witness counts", 60, criterion_3},
      {4, "generated k-regular instances are k-graphs", 60, criterion_4},
      {5, "four-vertex construction end to end", 120, criterion_5},
      {6, "good digraph decomposition vs brute force", 60, criterion_6},
      {7, "commutator certificate", 5, criterion_7},
      {8, "invariant suites", 120, criterion_8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      o.pass = false;
      o.detail << " (over the " << c.limit_s << " s budget)";
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail.str() << " ("
              << secs << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
