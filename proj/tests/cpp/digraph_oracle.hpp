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

// Independent model of the auxiliary digraph: components recomputed from
// raw arcs, type shapes classified from the type list, and every partition
// of the components enumerated.

#ifndef POLYWIT_TESTS_DIGRAPH_ORACLE_HPP_
#define POLYWIT_TESTS_DIGRAPH_ORACLE_HPP_

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "polywit/fourvertex.hpp"

namespace oracle {

using polywit::Color;

struct Kind {
  bool cycle = false;
  int pairs = 1;  // number of e nodes
  Color start = Color::kNone;
  Color end = Color::kNone;

  int nodes() const { return 2 * pairs; }
  bool is_short() const { return pairs == 1; }
  bool mono() const { return !cycle && start == end; }
  bool br() const { return !cycle && start == Color::kBlue && end == Color::kRed; }
  bool rb() const { return !cycle && start == Color::kRed && end == Color::kBlue; }
};

inline int count_color(const std::vector<Kind>& ks, Color c) {
  int n = 0;
  for (const auto& k : ks) n += (k.start == c) + (k.end == c);
  return n;
}

inline bool good(const std::vector<Kind>& ks) {
  int nodes = 0;
  for (const auto& k : ks) nodes += k.nodes();
  return 2 * count_color(ks, Color::kRed) <= nodes && 2 * count_color(ks, Color::kBlue) <= nodes;
}

inline bool shorts_one_color(const std::vector<Kind>& rest) {
  if (rest.empty()) return true;
  const Color c = rest.front().start;
  return std::all_of(rest.begin(), rest.end(),
                     [&](const Kind& k) { return k.mono() && k.is_short() && k.start == c; });
}

inline bool has_type(int type, const std::vector<Kind>& ks) {
  auto sc = [](const Kind& k) { return k.cycle && k.pairs == 1; };
  auto lc = [](const Kind& k) { return k.cycle && k.pairs > 1; };
  auto n_of = [&](auto pred) { return std::count_if(ks.begin(), ks.end(), pred); };
  auto drop = [&](std::vector<std::size_t> idx) {
    std::vector<Kind> out;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (std::find(idx.begin(), idx.end(), i) == idx.end()) out.push_back(ks[i]);
    }
    return out;
  };
  const auto n = static_cast<long>(ks.size());
  switch (type) {
    case 1: {
      auto rr = n_of([](const Kind& k) { return k.mono() && k.is_short() && k.start == Color::kRed; });
      auto bb = n_of([](const Kind& k) { return k.mono() && k.is_short() && k.start == Color::kBlue; });
      return rr == 1 && bb == 1 && (n == 2 || (n == 3 && n_of(sc) == 1));
    }
    case 2:
      return (n == 2 || n == 3) && n_of(sc) == n - 1 && n_of([](const Kind& k) { return k.mono(); }) == 1;
    case 3:
      return n == 3 && n_of(sc) == 1 && n_of([](const Kind& k) { return k.br(); }) == 1 &&
             n_of([](const Kind& k) { return k.rb(); }) == 1;
    case 4:
      return n >= 2 && n_of(sc) == n;
    case 5:
      for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ks[i].mono() && !ks[i].is_short() && shorts_one_color(drop({i}))) return true;
      }
      return false;
    case 6:
      for (std::size_t i = 0; i < ks.size(); ++i) {
        for (std::size_t j = 0; j < ks.size(); ++j) {
          if (ks[i].br() && ks[j].rb() && shorts_one_color(drop({i, j}))) return true;
        }
      }
      return false;
    case 7:
      for (std::size_t i = 0; i < ks.size(); ++i) {
        if (lc(ks[i]) && shorts_one_color(drop({i}))) return true;
      }
      return false;
    case 8:
      return n == 2 && n_of(sc) == 1 && n_of(lc) == 1;
    default:
      return false;
  }
}

struct RawComponent {
  Kind kind;
  std::vector<int> nodes;  // sorted
};

// Components straight from the arc list: f_i -> e_i, e_i -> f_j per arc.
inline std::vector<RawComponent> raw_components(int m, const std::vector<std::pair<int, int>>& arcs,
                                                const std::vector<Color>& colors) {
  std::vector<int> next(2 * m, -1), prev(2 * m, -1);
  for (int i = 0; i < m; ++i) {
    next[m + i] = i;
    prev[i] = m + i;
  }
  for (auto [i, j] : arcs) {
    next[i] = m + j;
    prev[m + j] = i;
  }
  std::vector<char> seen(2 * m, 0);
  std::vector<RawComponent> out;
  for (int v = 0; v < 2 * m; ++v) {
    if (seen[v]) continue;
    int s = v;
    RawComponent c;
    while (prev[s] != -1) {
      s = prev[s];
      if (s == v) {
        c.kind.cycle = true;
        break;
      }
    }
    int x = c.kind.cycle ? v : s;
    const int first = x;
    do {
      seen[x] = 1;
      c.nodes.push_back(x);
      x = next[x];
    } while (x != -1 && x != first);
    if (!c.kind.cycle) {
      c.kind.start = colors[s];
      c.kind.end = colors[c.nodes.back()];
    }
    c.kind.pairs = static_cast<int>(c.nodes.size()) / 2;
    std::sort(c.nodes.begin(), c.nodes.end());
    out.push_back(c);
  }
  return out;
}

struct Block {
  std::vector<int> members;  // component indices, sorted
  std::set<int> types;
};

// Every partition into good blocks that each have at least one type.
inline std::vector<std::vector<Block>> valid_partitions(const std::vector<Kind>& kinds) {
  std::vector<std::vector<Block>> out;
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int i) {
    if (i == static_cast<int>(kinds.size())) {
      std::vector<Block> p;
      for (const auto& b : blocks) {
        std::vector<Kind> ks;
        for (int k : b) ks.push_back(kinds[k]);
        if (!good(ks)) return;
        Block blk{b, {}};
        for (int t = 1; t <= 8; ++t) {
          if (has_type(t, ks)) blk.types.insert(t);
        }
        if (blk.types.empty()) return;
        p.push_back(blk);
      }
      out.push_back(p);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(i);
      rec(i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({i});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
  return out;
}

// Calls fn(arcs, colors) for every labelled digraph on e_0..e_{m-1}: each
// partial injection e -> f, each coloring of path ends.
inline void for_each_labelled_digraph(
    int m, const std::function<void(const std::vector<std::pair<int, int>>&, const std::vector<Color>&)>& fn) {
  std::vector<int> target(m, -1);
  std::vector<char> used(m, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      std::vector<std::pair<int, int>> arcs;
      std::vector<char> has_out(m, 0), has_in(m, 0);
      for (int e = 0; e < m; ++e) {
        if (target[e] >= 0) {
          arcs.emplace_back(e, target[e]);
          has_out[e] = 1;
          has_in[target[e]] = 1;
        }
      }
      std::vector<int> ends;
      for (int e = 0; e < m; ++e) {
        if (!has_out[e]) ends.push_back(e);
        if (!has_in[e]) ends.push_back(m + e);
      }
      std::vector<Color> colors(2 * m, Color::kNone);
      for (unsigned mask = 0; mask < (1u << ends.size()); ++mask) {
        for (std::size_t k = 0; k < ends.size(); ++k) colors[ends[k]] = (mask >> k & 1u) ? Color::kBlue : Color::kRed;
        fn(arcs, colors);
      }
      return;
    }
    target[i] = -1;
    rec(i + 1);
    for (int j = 0; j < m; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      target[i] = j;
      rec(i + 1);
      used[j] = 0;
    }
    target[i] = -1;
  };
  rec(0);
}

// Red path starts equal red path ends, at least four nodes, good overall.
inline bool admissible(const std::vector<Kind>& kinds) {
  int nodes = 0, br = 0, rb = 0;
  for (const auto& k : kinds) {
    nodes += k.nodes();
    br += k.br();
    rb += k.rb();
  }
  return nodes >= 4 && br == rb && good(kinds);
}

}  // namespace oracle

#endif  // POLYWIT_TESTS_DIGRAPH_ORACLE_HPP_
