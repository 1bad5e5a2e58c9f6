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

#include "polywit/words.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "polywit/error.hpp"

namespace polywit {
namespace {

class WordParser {
 public:
  WordParser(std::string_view text, int rank) : text_(text), rank_(rank) {}

  std::vector<Letter> parse() {
    std::vector<Letter> out = sequence();
    skip_blank();
    if (pos_ != text_.size()) {
      fail(text_[pos_] == ')' ? "unbalanced ')'" : "unexpected symbol");
    }
    return out;
  }

 private:
  std::vector<Letter> sequence() {
    std::vector<Letter> out;
    while (true) {
      skip_blank();
      if (pos_ == text_.size() || text_[pos_] == ')') return out;
      std::vector<Letter> item = atom();
      int exponent = 1;
      skip_blank();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        exponent = integer();
      }
      if (exponent < 0) {
        item = invert(item);
        exponent = -exponent;
      }
      for (int i = 0; i < exponent; ++i) {
        out.insert(out.end(), item.begin(), item.end());
      }
    }
  }

  std::vector<Letter> atom() {
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      std::vector<Letter> inner = sequence();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (!std::isalpha(static_cast<unsigned char>(ch))) {
      fail(std::string("unknown symbol '") + ch + "'");
    }
    ++pos_;
    int sign = std::isupper(static_cast<unsigned char>(ch)) ? -1 : 1;
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    int generator = lower - 'a' + 1;
    if (pos_ < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (lower != 'a') fail("explicit generator tokens are written a<k>");
      generator = digits();
      if (generator < 1) fail("generator index must be positive");
    }
    if (generator > rank_) {
      fail("generator " + format_letter({generator, 1}, 1000) +
           " exceeds rank " + std::to_string(rank_));
    }
    return {Letter{generator, sign}};
  }

  int integer() {
    skip_blank();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    int value = digits();
    return negative ? -value : value;
  }

  int digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) fail("number out of range");
    return value;
  }

  void skip_blank() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '*')) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("word '" + std::string(text_) + "': " + what +
                     " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;
};

bool matches_rotated_power(const std::vector<Letter>& letters,
                           const std::vector<Letter>& base) {
  const std::size_t n = base.size();
  if (n == 0 || letters.empty() || letters.size() % n != 0) return false;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < letters.size() && ok; ++i) {
      ok = letters[i] == base[(i + shift) % n];
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::size_t WordList::total_length() const {
  std::size_t total = 0;
  for (const Word& w : words) total += w.size();
  return total;
}

Word parse_word(std::string_view text, int rank) {
  if (rank < 1) throw PreconditionError("rank must be at least 1");
  Word word;
  word.letters = WordParser(text, rank).parse();
  if (word.letters.empty()) {
    throw ParseError("word '" + std::string(text) + "' is empty");
  }
  return word;
}

WordList parse_word_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<int> rank;
  std::vector<Word> words;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (!rank) {
      std::istringstream header(line);
      std::string keyword;
      int n = 0;
      if (!(header >> keyword >> n) || keyword != "rank" || n < 1) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'rank <n>' header");
      }
      rank = n;
      continue;
    }
    words.push_back(parse_word(line, *rank));
  }
  if (!rank) throw ParseError("missing 'rank <n>' header");
  if (words.empty()) throw ParseError("word list is empty");
  return make_word_list(*rank, words);
}

WordList make_word_list(int rank, const std::vector<Word>& words) {
  WordList list;
  list.rank = rank;
  for (const Word& w : words) {
    for (const Letter& l : w.letters) {
      if (l.generator < 1 || l.generator > rank) {
        throw PreconditionError("letter outside rank " + std::to_string(rank));
      }
    }
    Word reduced = cyclic_reduce(w);
    reduced.index = static_cast<int>(list.words.size());
    list.words.push_back(std::move(reduced));
  }
  return list;
}

bool is_cyclically_reduced(const Word& word) {
  const auto& l = word.letters;
  if (l.empty()) return false;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[(i + 1) % l.size()] == l[i].inverse()) return false;
  }
  return true;
}

Word cyclic_reduce(const Word& word) {
  std::vector<Letter> stack;
  for (const Letter& l : word.letters) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  std::size_t lo = 0;
  std::size_t hi = stack.size();
  while (hi - lo >= 2 && stack[lo] == stack[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  if (lo == hi) throw TrivialWordError("word is trivial up to conjugacy");
  Word out;
  out.index = word.index;
  out.letters.assign(stack.begin() + static_cast<std::ptrdiff_t>(lo),
                     stack.begin() + static_cast<std::ptrdiff_t>(hi));
  return out;
}

std::vector<Subword> length2_cyclic_subwords(const Word& word) {
  std::vector<Subword> out;
  const auto& l = word.letters;
  out.reserve(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    out.push_back({l[i], l[(i + 1) % l.size()], i});
  }
  return out;
}

RegularityProfile regularity_profile(const WordList& list) {
  RegularityProfile profile;
  profile.counts.assign(static_cast<std::size_t>(list.rank), 0);
  for (const Word& w : list.words) {
    for (const Letter& l : w.letters) ++profile.counts[l.generator - 1];
  }
  bool equal = true;
  for (int c : profile.counts) equal = equal && c == profile.counts.front();
  if (equal) profile.k = profile.counts.front();
  return profile;
}

std::string format_letter(Letter letter, int rank) {
  if (rank <= 26) {
    char ch = static_cast<char>('a' + letter.generator - 1);
    if (letter.sign < 0) ch = static_cast<char>(std::toupper(ch));
    return std::string(1, ch);
  }
  std::string s = "a" + std::to_string(letter.generator);
  if (letter.sign < 0) s += "^-1";
  return s;
}

std::string format_word(const std::vector<Letter>& letters, int rank) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (rank > 26 && i > 0) out += ' ';
    out += format_letter(letters[i], rank);
  }
  return out;
}

std::vector<Letter> invert(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

std::optional<PowerMatch> match_power_of_conjugate(
    const std::vector<Letter>& letters, const WordList& list,
    bool allow_inverse) {
  const std::vector<Letter> inverse = invert(letters);
  for (const Word& w : list.words) {
    if (w.empty()) continue;
    int exponent = static_cast<int>(letters.size() / w.size());
    if (matches_rotated_power(letters, w.letters)) {
      return PowerMatch{w.index, exponent, false};
    }
    if (allow_inverse && matches_rotated_power(inverse, w.letters)) {
      return PowerMatch{w.index, exponent, true};
    }
  }
  return std::nullopt;
}

}  // namespace polywit
