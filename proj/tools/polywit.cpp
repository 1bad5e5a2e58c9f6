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

// Command-line front end. Exit status: 0 success or feasible, 2 infeasible
// or refuted, 1 error.

#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "polywit/error.hpp"
#include "polywit/fourvertex.hpp"
#include "polywit/generators.hpp"
#include "polywit/pipeline.hpp"

using namespace polywit;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kInfeasible = 2;

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(out, text);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string analysis_text(const WhiteheadGraph& g, const AnalysisReport& r) {
  std::string s;
  for (const auto& v : r.vertices) {
    s += "lambda(" + g.vertex_name(v.vertex) + ", " + g.vertex_name(g.mu(v.vertex)) + ") = " + std::to_string(v.lambda) +
         (v.lambda == v.degree ? " = " : " < ") + std::to_string(v.degree) + " = deg(" + g.vertex_name(v.vertex) + ")\n";
  }
  s += std::string("connected=") + (r.connected ? "true" : "false") + " minimal=" + (r.minimal ? "true" : "false") +
       " diskbusting=" + (r.diskbusting ? "true" : "false") + "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify polygonality of word lists in free groups"};
  app.require_subcommand(1);
  std::string input, out, format = "json", method = "auto", witness_path, kind = "words";
  bool require_long = false, digraph = false;
  std::uint64_t seed = 1;
  int rank = 2, count = 1, length = 8, n = 4, k = 3, max_degree = 6;
  std::string sigma_out;

  auto* analyze_cmd = app.add_subcommand("analyze", "Whitehead graph, degrees and lambda(v, mu(v))");
  auto* witness_cmd = app.add_subcommand("witness", "Construct or search for a cycle-list witness");
  auto* verify_cmd = app.add_subcommand("verify", "Check a witness or an infeasibility certificate");
  auto* surface_cmd = app.add_subcommand("surface", "Build the surface certificate");
  auto* dot_cmd = app.add_subcommand("export-dot", "Graph (or auxiliary digraph) in DOT");
  auto* gen_cmd = app.add_subcommand("gen", "Random valid instance from a seed");
  auto* self_cmd = app.add_subcommand("selftest", "Run the built-in examples");

  for (auto* c : {analyze_cmd, witness_cmd, verify_cmd, surface_cmd, dot_cmd}) {
    c->add_option("input", input, "built-in name, word-list file or graph .json")->required();
    c->add_option("--out", out, "output file (stdout when absent)");
  }
  analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  witness_cmd->add_option("--method", method)->check(CLI::IsMember({"auto", "lp", "regular", "fourvertex"}));
  witness_cmd->add_flag("--require-long", require_long, "demand a cycle of length >= 3 (lp)");
  witness_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  verify_cmd->add_option("witness", witness_path, "witness or certificate JSON")->required();
  verify_cmd->add_flag("--require-long", require_long);
  surface_cmd->add_option("--witness", witness_path, "use this witness instead of searching");
  surface_cmd->add_option("--method", method)->check(CLI::IsMember({"auto", "lp", "regular", "fourvertex"}));
  dot_cmd->add_flag("--digraph", digraph, "auxiliary digraph of a four-vertex graph");
  dot_cmd->add_option("--sigma-out", sigma_out, "also write the connecting maps as JSON");
  gen_cmd->add_option("--kind", kind)->check(CLI::IsMember({"words", "kgraph", "fourvertex"}));
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--rank", rank);
  gen_cmd->add_option("--count", count);
  gen_cmd->add_option("--length", length);
  gen_cmd->add_option("--n", n);
  gen_cmd->add_option("--k", k);
  gen_cmd->add_option("--max-degree", max_degree);
  gen_cmd->add_option("--out", out);
  gen_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  }

  try {
    if (*self_cmd) {
      bool all = true;
      for (const auto& line : self_test()) {
        std::cout << (line.pass ? "PASS " : "FAIL ") << line.name << " (" << line.detail << ")\n";
        all = all && line.pass;
      }
      return all ? kOk : kError;
    }
    if (*gen_cmd) {
      Rng rng(seed);
      if (kind == "words") {
        const WordList list = random_word_list(rng, rank, count, length);
        std::string text = "rank " + std::to_string(list.rank) + "\n";
        for (const auto& w : list.words) text += format_word(w.letters, list.rank) + "\n";
        emit(out, text);
      } else {
        const WhiteheadGraph g = kind == "kgraph" ? random_k_graph(rng, n, k) : random_four_vertex(rng, max_degree);
        emit(out, dump(graph_to_json(g)));
      }
      return kOk;
    }

    const Instance inst = load_instance(input);
    const WhiteheadGraph& g = inst.graph;
    if (*analyze_cmd) {
      const AnalysisReport r = analyze(g);
      emit(out, format == "text" ? analysis_text(g, r) : dump(analysis_to_json(g, r)));
      return kOk;
    }
    if (*witness_cmd) {
      const WitnessOutcome w = find_witness(g, parse_method(method), require_long);
      if (format == "text") {
        std::string s = std::string(w.feasible ? "feasible" : "infeasible") + " via " + method_name(w.method) + "\n";
        if (w.feasible) {
          for (const auto& e : w.witness.entries()) {
            s += std::to_string(e.multiplicity) + " x {";
            for (std::size_t i = 0; i < e.cycle.edges.size(); ++i) s += (i ? " " : "") + std::to_string(e.cycle.edges[i]);
            s += "}\n";
          }
        }
        emit(out, s);
      } else {
        emit(out, dump(w.json));
      }
      if (!w.feasible) std::cerr << "infeasible: no list of cycles satisfies the condition\n";
      return w.feasible ? kOk : kInfeasible;
    }
    if (*verify_cmd) {
      Json j;
      try {
        j = Json::parse(read_file(witness_path));
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(witness_path + ": " + e.what());
      }
      const VerifyOutcome v = verify_file(g, j, require_long);
      emit(out, v.message + "\n");
      if (v.pass) return kOk;
      return v.refutation || !j.contains("status") ? kInfeasible : kError;
    }
    if (*surface_cmd) {
      std::optional<CycleList> w;
      if (!witness_path.empty()) w = witness_from_json(g, Json::parse(read_file(witness_path)));
      emit(out, dump(surface_certificate(inst, w, parse_method(method))));
      return kOk;
    }
    if (*dot_cmd) {
      if (digraph) {
        const FourVertexResult r = four_vertex_witness(g);
        emit(out, aux_digraph_to_dot(r.digraph, r.completion.needs_fallback ? nullptr : &r.completion));
      } else {
        emit(out, graph_to_dot(g));
      }
      if (!sigma_out.empty()) write_file_atomic(sigma_out, dump(sigma_table_json(g)));
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kError;
}
