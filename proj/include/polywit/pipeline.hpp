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

#ifndef POLYWIT_PIPELINE_HPP_
#define POLYWIT_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polywit/serialize.hpp"
#include "polywit/witness.hpp"
#include "polywit/words.hpp"

namespace polywit {

enum class Method { kAuto, kLp, kRegular, kFourVertex };

Method parse_method(const std::string& name);
std::string method_name(Method method);

// fourvertex for connected four-vertex graphs with lambda(v, mu(v)) = deg(v),
// regular for connected k-regular k-graphs (k >= 2), lp otherwise.
Method select_method(const WhiteheadGraph& graph);

struct Instance {
  std::string source;
  std::optional<WordList> words;
  WhiteheadGraph graph;
};

// A built-in name, a `.json` graph file or a word-list file.
Instance load_instance(const std::string& source);

struct WitnessOutcome {
  Method method = Method::kLp;
  bool feasible = false;
  CycleList witness;
  Json json;  // witness, good list or infeasibility certificate
};

WitnessOutcome find_witness(const WhiteheadGraph& graph, Method method, bool require_long);

struct VerifyOutcome {
  bool pass = false;
  bool refutation = false;  // the file was a valid infeasibility certificate
  std::string message;
};

// Checks a witness file, or an infeasibility certificate with a fresh cycle
// enumeration.
VerifyOutcome verify_file(const WhiteheadGraph& graph, const Json& j, bool require_long);

// Surface certificate for a witness (found with `method` when absent).
Json surface_certificate(const Instance& instance, const std::optional<CycleList>& witness, Method method);

struct SelfTestLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<SelfTestLine> self_test();

// Text output written to a sibling temporary file and renamed into place.
void write_file_atomic(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace polywit

#endif  // POLYWIT_PIPELINE_HPP_
