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

#include "polywit/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "polywit/builtins.hpp"
#include "polywit/error.hpp"
#include "polywit/fourvertex.hpp"
#include "polywit/regular.hpp"
#include "polywit/surface.hpp"

namespace polywit {
namespace {

bool lambda_condition(const WhiteheadGraph& g) {
  if (!g.has_full_involution()) return false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (local_edge_connectivity(g, v, g.mu(v)) != g.degree(v)) return false;
  }
  return true;
}

}  // namespace

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::kAuto;
  if (name == "lp") return Method::kLp;
  if (name == "regular") return Method::kRegular;
  if (name == "fourvertex") return Method::kFourVertex;
  throw PreconditionError("unknown method '" + name + "' (auto, lp, regular, fourvertex)");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::kAuto:
      return "auto";
    case Method::kLp:
      return "lp";
    case Method::kRegular:
      return "regular";
    case Method::kFourVertex:
      return "fourvertex";
  }
  return "?";
}

Method select_method(const WhiteheadGraph& g) {
  if (!g.connected()) return Method::kLp;
  if (g.num_vertices() == 4 && g.has_sigma() && lambda_condition(g)) return Method::kFourVertex;
  const auto k = g.regularity();
  if (k && *k >= 2 && g.num_vertices() % 2 == 0 && g.num_vertices() <= 20 && is_k_graph(g).is_k_graph) {
    return Method::kRegular;
  }
  return Method::kLp;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp + "'");
    out << contents;
    if (!out) throw Error("write to '" + tmp + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot move '" + tmp + "' to '" + path + "': " + ec.message());
}

Instance load_instance(const std::string& source) {
  for (const auto& name : builtin_names()) {
    if (name == source) {
      Builtin b = builtin(name);
      return {source, std::move(b.words), std::move(b.graph)};
    }
  }
  const std::string text = read_file(source);
  if (std::filesystem::path(source).extension() == ".json") {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("'") + source + "': " + e.what());
    }
    return {source, std::nullopt, graph_from_json(j)};
  }
  WordList list = parse_word_list(text);
  WhiteheadGraph g = build_whitehead_graph(list);
  return {source, std::move(list), std::move(g)};
}

WitnessOutcome find_witness(const WhiteheadGraph& g, Method method, bool require_long) {
  WitnessOutcome out;
  out.method = method == Method::kAuto ? select_method(g) : method;
  switch (out.method) {
    case Method::kFourVertex: {
      const FourVertexResult r = four_vertex_witness(g);
      out.feasible = true;
      out.witness = r.witness;
      out.json = good_list_to_json(g, r);
      break;
    }
    case Method::kRegular: {
      const RegularWitness r = regular_witness(g);
      out.feasible = true;
      out.witness = r.cycles;
      out.json = witness_to_json(g, r.cycles);
      out.json["method"] = "regular";
      out.json["m1"] = r.m1;
      out.json["m2"] = r.m2;
      out.json["coloring"] = coloring_to_json(r.coloring);
      break;
    }
    default: {
      const LpSearchResult r = search_witness_lp(g, require_long);
      out.feasible = r.feasible;
      if (r.feasible) {
        out.witness = r.witness;
        out.json = witness_to_json(g, r.witness);
        out.json["method"] = "lp";
      } else {
        out.json = infeasible_to_json(g, r);
      }
      break;
    }
  }
  if (out.feasible) {
    const auto verdict = verify_witness(g, out.witness, require_long);
    if (!verdict.pass) throw InternalError("constructed witness fails verification");
  }
  return out;
}

VerifyOutcome verify_file(const WhiteheadGraph& g, const Json& j, bool require_long) {
  VerifyOutcome out;
  if (j.value("status", std::string()) == "infeasible") {
    if (j.value("graph_hash", std::string()) != graph_hash(g)) throw PreconditionError("certificate was written for a different graph");
    const FarkasCertificate c = farkas_from_json(g, j);
    out.refutation = verify_farkas(g, c);
    out.message = out.refutation ? "infeasibility certificate valid" : "infeasibility certificate invalid";
    return out;
  }
  const CycleList w = witness_from_json(g, j);
  const auto verdict = verify_witness(g, w, require_long);
  out.pass = verdict.pass;
  if (verdict.pass) {
    out.message = "witness valid";
  } else if (!verdict.balanced) {
    out.message = std::to_string(verdict.failures.size()) + " unbalanced pair(s)";
  } else {
    out.message = "no cycle of length >= 3";
  }
  return out;
}

Json surface_certificate(const Instance& inst, const std::optional<CycleList>& witness, Method method) {
  if (!inst.words) throw PreconditionError("surface certificates need a word list");
  CycleList w;
  if (witness) {
    w = *witness;
  } else {
    const WitnessOutcome found = find_witness(inst.graph, method, true);
    if (!found.feasible) throw PreconditionError("no witness exists; no surface to build");
    w = found.witness;
  }
  const SurfaceComplex sc = build_surface(inst.graph, w);
  const SurfaceReport r = surface_report(sc, *inst.words);
  const std::string wh = hex64(fnv1a64(witness_to_json(inst.graph, w).dump()));
  Json j = certificate_to_json(wh, r, inst.words->rank);
  j["nu"] = sc.nu;
  j["eta"] = sc.eta;
  j["zeta"] = sc.zeta;
  return j;
}

std::vector<SelfTestLine> self_test() {
  std::vector<SelfTestLine> out;
  auto run = [&](const std::string& name, auto fn) {
    SelfTestLine line{name, false, ""};
    try {
      line.pass = fn(line.detail);
    } catch (const std::exception& e) {
      line.detail = e.what();
    }
    out.push_back(line);
  };
  run("example-6.1 lambda and refutation", [](std::string& d) {
    const Builtin b = builtin("example-6.1");
    const auto r = analyze(b.graph);
    const auto lp = search_witness_lp(b.graph, true);
    d = "lambda(a1,a1-)=" + std::to_string(r.vertices[0].lambda) + " deg(a1)=" + std::to_string(r.vertices[0].degree);
    return r.vertices[0].lambda == 3 && r.vertices[0].degree == 4 && !r.minimal && !lp.feasible &&
           verify_farkas(b.graph, lp.certificate);
  });
  run("remark-2.4-nonminimal lambda", [](std::string& d) {
    const Builtin b = builtin("remark-2.4-nonminimal");
    const auto r = analyze(b.graph);
    d = "lambda(a2,a2-)=" + std::to_string(r.vertices[2].lambda) + " deg(a2)=" + std::to_string(r.vertices[2].degree);
    return !r.minimal && r.vertices[2].lambda == 3 && r.vertices[2].degree == 6;
  });
  run("remark-2.4 witness and surface", [](std::string& d) {
    const Instance inst = load_instance("remark-2.4");
    const auto r = analyze(inst.graph);
    const auto fv = find_witness(inst.graph, Method::kFourVertex, true);
    const auto lp = find_witness(inst.graph, Method::kLp, true);
    const Json cert = surface_certificate(inst, fv.witness, Method::kFourVertex);
    d = "chi(S)-m=" + std::to_string(cert["chi_S_minus_m"].get<int>());
    return r.minimal && r.diskbusting && fv.feasible && lp.feasible && cert["chi_S_minus_m"].get<int>() < 0;
  });
  run("commutator certificate", [](std::string& d) {
    const Instance inst = load_instance("commutator");
    const Json cert = surface_certificate(inst, std::nullopt, Method::kAuto);
    d = "chi(S'')=" + std::to_string(cert["chi_S_doubleprime"].get<int>());
    return cert["chi_S_minus_m"] == -1 && cert["chi_S_doubleprime"] == -2;
  });
  run("figure-7 decomposition", [](std::string& d) {
    const WhiteheadGraph g = figure7_graph();
    const FourVertexResult r = four_vertex_witness(g);
    d = "types";
    for (const auto& p : r.completion.parts) d += " " + std::to_string(p.type);
    return r.completion.parts.size() == 2 && r.completion.parts[0].type == 1 && r.completion.parts[1].type == 6 &&
           verify_witness(g, r.witness, true).pass;
  });
  return out;
}

}  // namespace polywit
