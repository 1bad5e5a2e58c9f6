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

#ifndef POLYWIT_WORDS_HPP_
#define POLYWIT_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polywit {

// A generator a_i (sign +1) or its inverse (sign -1). Generators are
// numbered from 1.
struct Letter {
  int generator = 1;
  int sign = 1;

  Letter inverse() const { return {generator, -sign}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct Word {
  std::vector<Letter> letters;
  // Index of the word within its list; -1 for free-standing words.
  int index = -1;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
};

// An ordered list of words in F_n. Duplicates are allowed.
struct WordList {
  int rank = 1;
  std::vector<Word> words;

  std::size_t total_length() const;
};

// Parses one word. Accepted forms, freely mixed:
//   compact   `abAB`        lowercase = generator, uppercase = inverse
//   explicit  `a3 a3^-1`    `a<k>` names generator k (needed past rank 26)
//   powers    `b^2`, `(ab^-1)^3`
// Whitespace and `*` are ignored. No reduction is performed.
Word parse_word(std::string_view text, int rank);

// Parses the word-list file format: a `rank <n>` line followed by one word
// per line. `#` starts a comment. Every word is cyclically reduced on load.
WordList parse_word_list(std::string_view text);

// Builds a list from already-parsed words, cyclically reducing each one.
WordList make_word_list(int rank, const std::vector<Word>& words);

bool is_cyclically_reduced(const Word& word);

// Freely and cyclically reduces `word`. The result represents the same
// conjugacy class. Throws TrivialWordError if nothing is left.
Word cyclic_reduce(const Word& word);

struct Subword {
  Letter first;
  Letter second;
  std::size_t position = 0;
};

// The |w| pairs (x_i, x_{i+1}) read cyclically, position i starting at 0.
std::vector<Subword> length2_cyclic_subwords(const Word& word);

struct RegularityProfile {
  // counts[g - 1] = occurrences of a_g^{+-1} across the whole list.
  std::vector<int> counts;
  // Set iff every generator occurs the same number of times.
  std::optional<int> k;
};

RegularityProfile regularity_profile(const WordList& list);

// Compact text when rank <= 26, explicit tokens otherwise.
std::string format_word(const std::vector<Letter>& letters, int rank);
std::string format_letter(Letter letter, int rank);

// Inverse word (reversed, each letter inverted).
std::vector<Letter> invert(const std::vector<Letter>& letters);

struct PowerMatch {
  int word_index = -1;
  int exponent = 0;   // always positive
  bool inverted = false;
};

// Finds a word u_j of `list` such that `letters` is u_j^c (or u_j^{-c} when
// `allow_inverse`) up to cyclic conjugation, c >= 1. Returns the lowest such
// j, or nullopt.
std::optional<PowerMatch> match_power_of_conjugate(
    const std::vector<Letter>& letters, const WordList& list,
    bool allow_inverse);

}  // namespace polywit

#endif  // POLYWIT_WORDS_HPP_
