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

#include "polywit/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "polywit/error.hpp"

namespace polywit {
namespace {

Json pair_json(const WhiteheadGraph& g, const PairKey& key) {
  const auto [v, e, f] = key;
  return Json{{"vertex", g.vertex_name(v)}, {"pair", {e, f}}};
}

PairKey pair_from_json(const WhiteheadGraph* g, const Json& j) {
  const Json& v = j.at("vertex");
  int vertex = v.is_number() ? v.get<int>() : (g ? g->vertex_by_name(v.get<std::string>()) : -1);
  if (vertex < 0) throw ParseError("unknown vertex in pair key");
  return {vertex, j.at("pair").at(0).get<int>(), j.at("pair").at(1).get<int>()};
}

int vertex_from_json(const Json& j, const std::vector<std::string>& names) {
  if (j.is_number_integer()) return j.get<int>();
  if (!j.is_string()) throw ParseError("vertex must be a name or an integer");
  const std::string s = j.get<std::string>();
  for (std::size_t v = 0; v < names.size(); ++v) {
    if (names[v] == s) return static_cast<int>(v);
  }
  throw ParseError("unknown vertex '" + s + "'");
}

std::string letters_text(const std::vector<Letter>& letters, int rank) { return format_word(letters, rank); }

const char* color_name(Color c) {
  switch (c) {
    case Color::kRed:
      return "red";
    case Color::kBlue:
      return "lightblue";
    default:
      return "white";
  }
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::string graph_hash(const WhiteheadGraph& graph) { return hex64(fnv1a64(graph_to_json(graph).dump())); }

Json graph_to_json(const WhiteheadGraph& g) {
  Json j;
  j["rank"] = g.rank();
  Json names = Json::array();
  for (int v = 0; v < g.num_vertices(); ++v) names.push_back(g.vertex_name(v));
  j["vertices"] = names;
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    Json je{{"id", e.id}, {"u", g.vertex_name(e.u)}, {"v", g.vertex_name(e.v)}};
    if (e.provenance) {
      je["word"] = e.provenance->word;
      je["position"] = e.provenance->position;
    }
    edges.push_back(je);
  }
  j["edges"] = edges;
  Json mu = Json::object();
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.mu(v) >= 0) mu[g.vertex_name(v)] = g.vertex_name(g.mu(v));
  }
  j["mu"] = mu;
  if (g.has_sigma()) {
    Json sigma = Json::object();
    for (int v = 0; v < g.num_vertices(); ++v) {
      Json at = Json::object();
      for (int d : g.darts_at(v)) at[std::to_string(edge_of_dart(d))] = edge_of_dart(g.sigma(d));
      sigma[g.vertex_name(v)] = at;
    }
    j["sigma"] = sigma;
  }
  return j;
}

WhiteheadGraph graph_from_json(const Json& j) {
  try {
    GraphSpec spec;
    spec.rank = j.value("rank", 0);
    std::vector<std::string> names;
    if (j.contains("vertices")) {
      names = j.at("vertices").get<std::vector<std::string>>();
    } else {
      for (int v = 0; v < 2 * spec.rank; ++v) names.push_back("a" + std::to_string(v / 2 + 1) + (v & 1 ? "-" : ""));
    }
    spec.num_vertices = static_cast<int>(names.size());
    for (int v = 0; v < spec.num_vertices; ++v) {
      const bool standard = v < 2 * spec.rank && names[v] == "a" + std::to_string(v / 2 + 1) + (v & 1 ? "-" : "");
      spec.names.push_back(standard ? "" : names[v]);
    }
    const Json& edges = j.at("edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Json& e = edges[i];
      if (e.contains("id") && e.at("id").get<std::size_t>() != i) throw ParseError("edge ids must be 0, 1, 2, ... in order");
      spec.endpoints.emplace_back(vertex_from_json(e.at("u"), names), vertex_from_json(e.at("v"), names));
      if (e.contains("word")) {
        spec.provenance.push_back(Provenance{e.at("word").get<int>(), e.value("position", 0)});
      } else {
        spec.provenance.push_back(std::nullopt);
      }
    }
    if (j.contains("mu")) {
      spec.mu.assign(spec.num_vertices, -1);
      for (const auto& [k, v] : j.at("mu").items()) spec.mu[vertex_from_json(Json(k), names)] = vertex_from_json(v, names);
    }
    if (j.contains("sigma")) {
      spec.sigma.assign(2 * spec.endpoints.size(), -1);
      auto dart = [&](int edge, int vertex) {
        if (edge < 0 || edge >= static_cast<int>(spec.endpoints.size())) throw ParseError("sigma names an unknown edge");
        const auto [a, b] = spec.endpoints[edge];
        if (a != vertex && b != vertex) throw ParseError("sigma edge is not at its vertex");
        return dart_of(edge, a == vertex ? 0 : 1);
      };
      for (const auto& [vk, table] : j.at("sigma").items()) {
        const int v = vertex_from_json(Json(vk), names);
        const int mv = spec.mu.empty() ? (v ^ 1) : spec.mu.at(v);
        for (const auto& [ek, image] : table.items()) {
          spec.sigma[dart(std::stoi(ek), v)] = dart(image.get<int>(), mv);
        }
      }
    }
    return WhiteheadGraph::create(std::move(spec));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
}

Json analysis_to_json(const WhiteheadGraph& g, const AnalysisReport& r) {
  Json vertices = Json::array();
  for (const auto& v : r.vertices) {
    vertices.push_back({{"vertex", g.vertex_name(v.vertex)},
                        {"mu", g.vertex_name(g.mu(v.vertex))},
                        {"degree", v.degree},
                        {"lambda", v.lambda}});
  }
  Json j{{"graph_hash", graph_hash(g)},
         {"num_vertices", g.num_vertices()},
         {"num_edges", g.num_edges()},
         {"vertices", vertices},
         {"connected", r.connected},
         {"minimal", r.minimal},
         {"diskbusting", r.diskbusting}};
  j["regular_degree"] = r.k ? Json(*r.k) : Json(nullptr);
  return j;
}

Json witness_to_json(const WhiteheadGraph& g, const CycleList& w) {
  Json cycles = Json::array();
  for (const auto& e : w.entries()) cycles.push_back({{"edges", e.cycle.edges}, {"multiplicity", e.multiplicity}});
  Json usage = Json::object();
  for (auto [e, k] : w.edge_usage()) usage[std::to_string(e)] = k;
  return Json{{"graph_hash", graph_hash(g)},
              {"cycles", cycles},
              {"long_cycle_present", w.has_long_cycle()},
              {"per_edge_usage", usage}};
}

CycleList witness_from_json(const WhiteheadGraph& g, const Json& j) {
  try {
    if (j.contains("graph_hash") && j.at("graph_hash").get<std::string>() != graph_hash(g)) {
      throw PreconditionError("witness was written for a different graph");
    }
    CycleList out;
    for (const Json& c : j.at("cycles")) {
      const auto k = c.value("multiplicity", std::int64_t{1});
      if (k <= 0) throw ParseError("cycle multiplicity must be positive");
      out.add(make_cycle(g, c.at("edges").get<std::vector<int>>()), k);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("witness JSON: ") + e.what());
  }
}

Json infeasible_to_json(const WhiteheadGraph& g, const LpSearchResult& r) {
  Json rows = Json::array();
  for (const auto& row : r.certificate.rows) {
    rows.push_back({{"constraint", pair_json(g, row.pair)},
                    {"image", pair_json(g, row.image)},
                    {"value", row.value.get_str()}});
  }
  Json darts = Json::array();
  for (const auto& [d, value] : r.certificate.dart_rows) darts.push_back({{"dart", d}, {"value", value.get_str()}});
  return Json{{"graph_hash", graph_hash(g)},
              {"status", "infeasible"},
              {"require_long", r.certificate.require_long},
              {"strict", r.certificate.strict},
              {"num_cycles", r.num_cycles},
              {"farkas", rows},
              {"dart_rows", darts}};
}

FarkasCertificate farkas_from_json(const WhiteheadGraph& g, const Json& j) {
  try {
    FarkasCertificate c;
    c.require_long = j.at("require_long").get<bool>();
    c.strict = j.value("strict", false);
    for (const Json& row : j.at("farkas")) {
      FarkasEntry e;
      e.pair = pair_from_json(&g, row.at("constraint"));
      e.image = pair_from_json(&g, row.at("image"));
      e.value = Rational(row.at("value").get<std::string>());
      e.value.canonicalize();
      c.rows.push_back(e);
    }
    for (const Json& d : j.value("dart_rows", Json::array())) {
      Rational v(d.at("value").get<std::string>());
      v.canonicalize();
      c.dart_rows.emplace_back(d.at("dart").get<int>(), v);
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("certificate JSON: malformed rational");
  }
}

Json coloring_to_json(const FractionalColoring& c) {
  Json ms = Json::array();
  for (const auto& [m, k] : c.matchings) ms.push_back({{"edges", m.edges}, {"multiplicity", k}});
  return Json{{"k", c.k}, {"ell", c.ell}, {"matchings", ms}};
}

Json good_list_to_json(const WhiteheadGraph& g, const FourVertexResult& r) {
  Json j = witness_to_json(g, r.witness);
  j["method"] = r.used_lp_fallback ? "lp-fallback" : "fourvertex";
  j["w"] = g.vertex_name(r.w);
  if (r.used_lp_fallback) {
    j["note"] = r.completion.note;
    return j;
  }
  j["c1"] = r.good.c1;
  j["c2"] = r.good.c2;
  j["c"] = r.completion.c;
  Json parts = Json::array();
  for (const auto& p : r.completion.parts) parts.push_back({{"type", p.type}, {"components", p.components}});
  j["parts"] = parts;
  Json levels = Json::array();
  for (const auto& l : r.good.levels) {
    Json lj{{"u", g.vertex_name(l.u)}, {"c1", l.c1}, {"c2", l.c2}};
    if (l.removed_edge >= 0) {
      lj["removed_edge"] = l.removed_edge;
      lj["a"] = l.a;
      lj["b"] = l.b;
    } else {
      lj["removed_edge"] = nullptr;
    }
    levels.push_back(lj);
  }
  j["constants_per_level"] = levels;
  return j;
}

Json certificate_to_json(const std::string& witness_hash, const SurfaceReport& r, int rank) {
  Json words = Json::array();
  for (std::size_t i = 0; i < r.boundary.size(); ++i) {
    const auto& bw = r.boundary[i];
    words.push_back({{"vertex", bw.vertex},
                     {"word", letters_text(bw.letters, rank)},
                     {"base_word_index", r.assignment[i]},
                     {"exponent", r.exponents[i]}});
  }
  Json degrees = Json::object();
  for (auto [j, k] : r.positive_degrees) degrees[std::to_string(j)] = k;
  Json out{{"witness_hash", witness_hash},
           {"m", r.m},
           {"chi_S_minus_m", r.chi_s_minus_m},
           {"chi_S_doubleprime", r.chi_s_doubleprime},
           {"orientable", r.orientable}};
  out["genus_S_doubleprime"] = r.genus ? Json(*r.genus) : Json(nullptr);
  out["boundary_words"] = words;
  out["positive_degrees"] = degrees;
  return out;
}

Json sigma_table_json(const WhiteheadGraph& g) {
  Json j = Json::object();
  if (!g.has_sigma()) return j;
  auto key = [&](int dart) { return std::to_string(edge_of_dart(dart)) + ":" + g.vertex_name(g.dart_vertex(dart)); };
  for (int d = 0; d < 2 * g.num_edges(); ++d) j[key(d)] = key(g.sigma(d));
  return j;
}

std::string graph_to_dot(const WhiteheadGraph& g) {
  std::ostringstream os;
  os << "graph W {\n";
  for (int v = 0; v < g.num_vertices(); ++v) os << "  \"" << g.vertex_name(v) << "\";\n";
  for (const Edge& e : g.edges()) {
    os << "  \"" << g.vertex_name(e.u) << "\" -- \"" << g.vertex_name(e.v) << "\" [label=\"";
    if (e.provenance) {
      os << 'w' << e.provenance->word << ":p" << e.provenance->position;
    } else {
      os << 'e' << e.id;
    }
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string aux_digraph_to_dot(const AuxDigraph& d, const Completion* completion) {
  std::ostringstream os;
  os << "digraph D {\n";
  for (int v = 0; v < d.num_nodes(); ++v) {
    const bool e = d.is_e(v);
    const int i = e ? v : v - d.m;
    os << "  n" << v << " [label=\"" << (e ? 'e' : 'f') << i + 1 << "\", style=filled, fillcolor=" << color_name(d.color[v])
       << "];\n";
  }
  for (int v = 0; v < d.num_nodes(); ++v) {
    if (d.succ[v] >= 0) os << "  n" << v << " -> n" << d.succ[v] << ";\n";
  }
  if (completion) {
    for (auto [e, f] : completion->added) os << "  n" << e << " -> n" << d.m + f << " [style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace polywit
