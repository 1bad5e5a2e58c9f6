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

#ifndef POLYWIT_ERROR_HPP_
#define POLYWIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace polywit {

// Base class for every error raised by the library. The CLI maps these to
// exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Cyclic reduction collapsed a word to the identity.
class TrivialWordError : public Error {
 public:
  using Error::Error;
};

// An operation was called on an input that violates its documented
// precondition (e.g. a non-regular graph passed to is_k_graph).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Graph construction found a loop. Kept separate from other structural
// errors since loops are a deliberate restriction, not malformed data.
class LoopError : public Error {
 public:
  using Error::Error;
};

// A construction that is guaranteed to succeed failed one of its
// machine checks. Seeing this means a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace polywit

#endif  // POLYWIT_ERROR_HPP_
