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
#include "polywit/error.hpp"
#include "polywit/words.hpp"

using namespace polywit;

namespace {
const Letter a{1, 1}, A{1, -1}, b{2, 1}, B{2, -1};

std::vector<Letter> L(const char* text, int rank = 2) { return parse_word(text, rank).letters; }
}  // namespace

TEST_CASE("parse_word transliterates compact text") {
  CHECK(L("abAB") == std::vector<Letter>{a, b, A, B});
  CHECK(parse_word("a", 1).letters == std::vector<Letter>{a});
  CHECK_THROWS_AS(parse_word("abc", 2), ParseError);
  CHECK_THROWS_AS(parse_word("", 2), ParseError);
  CHECK_THROWS_AS(parse_word("a?b", 2), ParseError);
}

TEST_CASE("parse_word explicit tokens, powers and groups") {
  CHECK(L("a1 a2^-1") == std::vector<Letter>{a, B});
  CHECK(L("b^2") == std::vector<Letter>{b, b});
  CHECK(L("a(aB)^3B^2") == std::vector<Letter>{a, a, B, a, B, a, B, B, B});
  CHECK(L("(ab)^-1") == std::vector<Letter>{B, A});
  CHECK(parse_word("a30^-1", 30).letters == std::vector<Letter>{{30, -1}});
  CHECK_THROWS_AS(parse_word("a3", 2), ParseError);
}

TEST_CASE("cyclic_reduce") {
  CHECK(cyclic_reduce(parse_word("baB", 2)).letters == std::vector<Letter>{a});
  CHECK(cyclic_reduce(parse_word("abab^2ab^3", 2)).letters == L("abab^2ab^3"));
  CHECK_THROWS_AS(cyclic_reduce(parse_word("aA", 2)), TrivialWordError);
  CHECK(cyclic_reduce(parse_word("abBBa", 2)).letters == std::vector<Letter>{a, B, a});

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Word w;
    int len = 1 + static_cast<int>(rng() % 9);
    for (int i = 0; i < len; ++i) w.letters.push_back({1 + static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1});
    try {
      Word r = cyclic_reduce(w);
      CHECK(is_cyclically_reduced(r));
      CHECK(cyclic_reduce(r).letters == r.letters);
      CHECK(r.size() % 2 == w.size() % 2);
    } catch (const TrivialWordError&) {
      CHECK(w.size() % 2 == 0);
    }
  }
}

TEST_CASE("length2_cyclic_subwords") {
  auto pairs = [](const char* text) {
    std::vector<std::pair<Letter, Letter>> out;
    for (const auto& s : length2_cyclic_subwords(parse_word(text, 2))) out.emplace_back(s.first, s.second);
    return out;
  };
  using P = std::vector<std::pair<Letter, Letter>>;
  CHECK(pairs("aBa^2b") == P{{a, B}, {B, a}, {a, a}, {a, b}, {b, a}});
  CHECK(pairs("a^2") == P{{a, a}, {a, a}});
  CHECK(pairs("abAB") == P{{a, b}, {b, A}, {A, B}, {B, a}});
  auto subs = length2_cyclic_subwords(parse_word("abAB", 2));
  for (std::size_t i = 0; i < subs.size(); ++i) CHECK(subs[i].position == i);
}

TEST_CASE("regularity_profile") {
  auto list = [](const char* text) { return make_word_list(2, {parse_word(text, 2)}); };
  auto p = regularity_profile(list("abAB"));
  CHECK(p.counts == std::vector<int>{2, 2});
  CHECK(p.k == 2);
  p = regularity_profile(list("abab^2ab^3"));
  CHECK(p.counts == std::vector<int>{3, 6});
  CHECK_FALSE(p.k.has_value());
  p = regularity_profile(list("a^2"));
  CHECK(p.counts == std::vector<int>{2, 0});
  CHECK_FALSE(p.k.has_value());

  WordList two = make_word_list(2, {parse_word("abAB", 2), parse_word("aab", 2)});
  auto q = regularity_profile(two);
  CHECK(q.counts[0] + q.counts[1] == static_cast<int>(two.total_length()));
}

TEST_CASE("parse_word_list file format") {
  WordList list = parse_word_list("# header\nrank 2\nabAB  # commutator\n\nbaB\n");
  REQUIRE(list.words.size() == 2);
  CHECK(list.rank == 2);
  CHECK(list.words[1].letters == std::vector<Letter>{a});
  CHECK(list.words[1].index == 1);
  CHECK_THROWS_AS(parse_word_list("abAB\n"), ParseError);
  CHECK_THROWS_AS(parse_word_list("rank 2\naA\n"), TrivialWordError);
}

TEST_CASE("format and power matching") {
  CHECK(format_word(L("aBa^2b"), 2) == "aBaab");
  CHECK(format_word({{27, -1}, {1, 1}}, 27) == "a27^-1 a1");
  WordList list = make_word_list(2, {parse_word("abab^2ab^3", 2), parse_word("aBa^2b", 2)});
  auto m = match_power_of_conjugate(L("a^2baB a^2baB"), list, false);
  REQUIRE(m.has_value());
  CHECK(m->word_index == 1);
  CHECK(m->exponent == 2);
  CHECK_FALSE(match_power_of_conjugate(invert(L("aBa^2b")), list, false).has_value());
  auto inv = match_power_of_conjugate(invert(L("aBa^2b")), list, true);
  REQUIRE(inv.has_value());
  CHECK(inv->inverted);
  CHECK_FALSE(match_power_of_conjugate(L("ab"), list, true).has_value());
}
