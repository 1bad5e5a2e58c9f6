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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polywit/builtins.hpp"
#include "polywit/error.hpp"
#include "polywit/fourvertex.hpp"
#include "polywit/pipeline.hpp"
#include "polywit/surface.hpp"

namespace py = pybind11;
using namespace polywit;

namespace {

Instance from_words(const std::string& text) {
  WordList list = parse_word_list(text);
  WhiteheadGraph g = build_whitehead_graph(list);
  return {"<words>", std::move(list), std::move(g)};
}

Instance from_builtin(const std::string& name) {
  Builtin b = builtin(name);
  return {name, std::move(b.words), std::move(b.graph)};
}

Instance from_graph_json(const std::string& text) {
  return {"<json>", std::nullopt, graph_from_json(Json::parse(text))};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Compiled core of polywit; use the `polywit` package instead.";

  auto base = py::register_exception<Error>(m, "PolywitError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<TrivialWordError>(m, "TrivialWordError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<LoopError>(m, "LoopError", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());

  py::class_<Instance>(m, "Instance")
      .def_static("from_words", &from_words, py::arg("text"))
      .def_static("from_builtin", &from_builtin, py::arg("name"))
      .def_static("from_graph_json", &from_graph_json, py::arg("text"))
      .def_property_readonly("num_vertices", [](const Instance& i) { return i.graph.num_vertices(); })
      .def_property_readonly("num_edges", [](const Instance& i) { return i.graph.num_edges(); })
      .def_property_readonly("has_words", [](const Instance& i) { return i.words.has_value(); })
      .def("vertex_name", [](const Instance& i, int v) { return i.graph.vertex_name(v); })
      .def("degree", [](const Instance& i, int v) { return i.graph.degree(v); })
      .def("mu", [](const Instance& i, int v) { return i.graph.mu(v); })
      .def("edge_connectivity", [](const Instance& i, int x, int y) { return local_edge_connectivity(i.graph, x, y); })
      .def("graph_json", [](const Instance& i) { return graph_to_json(i.graph).dump(); })
      .def("graph_hash", [](const Instance& i) { return graph_hash(i.graph); })
      .def("dot", [](const Instance& i) { return graph_to_dot(i.graph); });

  m.def("builtin_names", &builtin_names);
  m.def("analyze_json", [](const Instance& i) { return analysis_to_json(i.graph, analyze(i.graph)).dump(); });
  m.def(
      "witness_json",
      [](const Instance& i, const std::string& method, bool require_long) {
        const WitnessOutcome w = find_witness(i.graph, parse_method(method), require_long);
        Json j = w.json;
        j["feasible"] = w.feasible;
        j["selected_method"] = method_name(w.method);
        return j.dump();
      },
      py::arg("instance"), py::arg("method") = "auto", py::arg("require_long") = false);
  m.def(
      "verify_json",
      [](const Instance& i, const std::string& text, bool require_long) {
        const VerifyOutcome v = verify_file(i.graph, Json::parse(text), require_long);
        return Json{{"pass", v.pass}, {"refutation", v.refutation}, {"message", v.message}}.dump();
      },
      py::arg("instance"), py::arg("witness"), py::arg("require_long") = false);
  m.def(
      "surface_json",
      [](const Instance& i, const std::optional<std::string>& witness, const std::string& method) {
        std::optional<CycleList> w;
        if (witness) w = witness_from_json(i.graph, Json::parse(*witness));
        return surface_certificate(i, w, parse_method(method)).dump();
      },
      py::arg("instance"), py::arg("witness") = std::nullopt, py::arg("method") = "auto");
  m.def("aux_digraph_dot", [](const Instance& i) {
    const FourVertexResult r = four_vertex_witness(i.graph);
    return aux_digraph_to_dot(r.digraph, r.completion.needs_fallback ? nullptr : &r.completion);
  });
  m.def("selftest", [] {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& l : self_test()) out.emplace_back(l.name, l.pass, l.detail);
    return out;
  });
}
