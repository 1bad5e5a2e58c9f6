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

#ifndef POLYWIT_BUILTINS_HPP_
#define POLYWIT_BUILTINS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "polywit/whitehead.hpp"
#include "polywit/words.hpp"

namespace polywit {

struct Builtin {
  std::string name;
  std::string description;
  std::optional<WordList> words;  // set for word-list examples
  WhiteheadGraph graph;
};

// Names accepted by builtin(): commutator, remark-2.4 (ab^-1a^2b),
// remark-2.4-nonminimal (abab^2ab^3), example-6.1 (a(ab^-1)^3b^-2) and
// figure-7 (a four-vertex graph given directly).
std::vector<std::string> builtin_names();

// Throws PreconditionError for unknown names.
Builtin builtin(const std::string& name);

// The four-vertex graph on w = a1, mu(w) = a1-, u = a2, mu(u) = a2- with
// three w-u, two w-mu(w), two w-mu(u), two mu(w)-u, three mu(w)-mu(u) and
// three u-mu(u) edges, and connecting maps chosen so that the digraph at w
// has components B-R, R-B (length 5), B-B, R-R, R-R.
WhiteheadGraph figure7_graph();

}  // namespace polywit

#endif  // POLYWIT_BUILTINS_HPP_
