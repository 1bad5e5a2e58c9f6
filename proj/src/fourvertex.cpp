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

#include "polywit/fourvertex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "polywit/error.hpp"
#include "polywit/regular.hpp"

namespace polywit {
namespace {

using Pair = std::pair<int, int>;

Pair ordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw InternalError("constant overflow");
  return out;
}

// ---- component classification ----

struct Shape {
  const AuxDigraph& d;
  const std::vector<Component>& comps;

  const Component& at(int i) const { return comps[i]; }
  Color start(int i) const { return d.color[at(i).nodes.front()]; }
  Color end(int i) const { return d.color[at(i).nodes.back()]; }
  bool path(int i) const { return !at(i).cycle; }
  bool short_cycle(int i) const { return at(i).cycle && at(i).is_short(); }
  bool long_cycle(int i) const { return at(i).cycle && !at(i).is_short(); }
  bool mono(int i) const { return path(i) && start(i) == end(i); }
  bool mono_of(int i, Color c) const { return mono(i) && start(i) == c; }
  bool short_mono_of(int i, Color c) const { return mono_of(i, c) && at(i).is_short(); }
  bool long_mono(int i) const { return mono(i) && !at(i).is_short(); }
  bool br(int i) const { return path(i) && start(i) == Color::kBlue && end(i) == Color::kRed; }
  bool rb(int i) const { return path(i) && start(i) == Color::kRed && end(i) == Color::kBlue; }

  int nodes(const std::vector<int>& set) const {
    int n = 0;
    for (int i : set) n += static_cast<int>(at(i).nodes.size());
    return n;
  }
  int colored(const std::vector<int>& set, Color c) const {
    int n = 0;
    for (int i : set) {
      for (int v : at(i).nodes) n += d.color[v] == c;
    }
    return n;
  }
  bool good(const std::vector<int>& set) const {
    const int n = nodes(set);
    return 2 * colored(set, Color::kRed) <= n && 2 * colored(set, Color::kBlue) <= n;
  }
  // Short paths, all of one color (vacuous when empty).
  bool short_monochromatic(const std::vector<int>& set) const {
    if (set.empty()) return true;
    Color c = start(set.front());
    return std::all_of(set.begin(), set.end(), [&](int i) { return short_mono_of(i, c); });
  }
};

std::vector<int> without(const std::vector<int>& set, const std::vector<int>& drop) {
  std::vector<int> out;
  for (int i : set) {
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) out.push_back(i);
  }
  return out;
}

template <class Pred>
std::vector<int> select(const std::vector<int>& set, Pred pred) {
  std::vector<int> out;
  std::copy_if(set.begin(), set.end(), std::back_inserter(out), pred);
  return out;
}

// ---- decomposition ----

// Long cycles, long monochromatic paths and B-R / R-B pairs as parts of
// type 7, 5 and 6.
std::vector<GoodPart> pack_long(const Shape& s, const std::vector<int>& set) {
  std::vector<GoodPart> out;
  std::vector<int> brs, rbs;
  for (int i : set) {
    if (s.long_cycle(i)) {
      out.push_back({7, {i}});
    } else if (s.long_mono(i)) {
      out.push_back({5, {i}});
    } else if (s.br(i)) {
      brs.push_back(i);
    } else if (s.rb(i)) {
      rbs.push_back(i);
    } else {
      throw InternalError("unexpected short component while packing long parts");
    }
  }
  if (brs.size() != rbs.size()) throw InternalError("B-R and R-B path counts differ");
  for (std::size_t k = 0; k < brs.size(); ++k) out.push_back({6, {brs[k], rbs[k]}});
  std::sort(out.begin(), out.end(), [](const GoodPart& a, const GoodPart& b) {
    return a.components.front() < b.components.front();
  });
  return out;
}

void decompose(const Shape& s, std::vector<int> set, std::vector<GoodPart>& out) {
  while (true) {
    auto rr = select(set, [&](int i) { return s.short_mono_of(i, Color::kRed); });
    auto bb = select(set, [&](int i) { return s.short_mono_of(i, Color::kBlue); });
    if (rr.empty() || bb.empty()) break;
    std::vector<int> h{rr.front(), bb.front()};
    std::sort(h.begin(), h.end());
    std::vector<int> rest = without(set, h);
    if (rest.empty()) {
      out.push_back({1, h});
      return;
    }
    if (s.nodes(rest) == 2) {
      if (!s.short_cycle(rest.front())) throw InternalError("two leftover nodes do not form a short cycle");
      h.push_back(rest.front());
      std::sort(h.begin(), h.end());
      out.push_back({1, h});
      return;
    }
    out.push_back({1, h});
    set = rest;
  }

  const bool any_bb = std::any_of(set.begin(), set.end(), [&](int i) { return s.short_mono_of(i, Color::kBlue); });
  const bool any_rr = std::any_of(set.begin(), set.end(), [&](int i) { return s.short_mono_of(i, Color::kRed); });
  const Color y = any_bb || !any_rr ? Color::kBlue : Color::kRed;
  auto short_yy = select(set, [&](int i) { return s.short_mono_of(i, y); });
  auto short_cycles = select(set, [&](int i) { return s.short_cycle(i); });

  if (!short_cycles.empty() && !short_yy.empty()) {
    GoodPart whole{2, set};
    if (matches_type(s.d, s.comps, whole)) {
      out.push_back(whole);
      return;
    }
    if (s.nodes(set) < 8) throw InternalError("short cycle and short path case with fewer than eight nodes");
    std::vector<int> x{short_cycles.front(), short_yy.front()};
    std::sort(x.begin(), x.end());
    out.push_back({2, x});
    std::vector<int> rest = without(set, x);
    if (!s.good(rest)) throw InternalError("remainder after a type (2) part is not good");
    decompose(s, rest, out);
    return;
  }

  if (short_cycles.empty()) {
    auto parts = pack_long(s, without(set, short_yy));
    for (int p : short_yy) {
      bool placed = false;
      for (auto& part : parts) {
        const int capacity = s.nodes(part.components) / 2 - s.colored(part.components, y);
        if (capacity > 0) {
          part.components.push_back(p);
          placed = true;
          break;
        }
      }
      if (!placed) throw InternalError("no part can absorb a short monochromatic path");
    }
    for (auto& part : parts) out.push_back(part);
    return;
  }

  if (short_cycles.size() >= 2) {
    out.push_back({4, short_cycles});
    for (auto& part : pack_long(s, without(set, short_cycles))) out.push_back(part);
    return;
  }

  const int sc = short_cycles.front();
  std::vector<int> rest = without(set, {sc});
  auto monos = select(rest, [&](int i) { return s.mono(i); });
  auto longs = select(rest, [&](int i) { return s.long_cycle(i); });
  auto brs = select(rest, [&](int i) { return s.br(i); });
  auto rbs = select(rest, [&](int i) { return s.rb(i); });
  GoodPart p;
  if (!monos.empty()) {
    p = {2, {monos.front(), sc}};
  } else if (!longs.empty()) {
    p = {8, {longs.front(), sc}};
  } else if (!brs.empty() && !rbs.empty()) {
    p = {3, {brs.front(), rbs.front(), sc}};
  } else {
    throw InternalError("single short cycle has no partner component");
  }
  std::sort(p.components.begin(), p.components.end());
  out.push_back(p);
  for (auto& part : pack_long(s, without(rest, p.components))) out.push_back(part);
}

// ---- completions ----

struct PartPlan {
  std::vector<Pair> added;  // (e node, f node)
  std::vector<std::pair<Pair, std::int64_t>> seeds;
  std::int64_t c = 0;
  bool fallback = false;
  std::string note;
};

std::vector<int> e_nodes(const AuxDigraph& d, const Component& c) {
  return select(c.nodes, [&](int v) { return d.is_e(v); });
}

void close_path(const Component& c, PartPlan& plan) {
  if (!c.cycle) plan.added.emplace_back(c.nodes.back(), c.nodes.front());
}

PartPlan plan_part(const Shape& s, const GoodPart& part) {
  const AuxDigraph& d = s.d;
  PartPlan plan;
  auto seed = [&](int a, int b, std::int64_t copies) {
    if (copies > 0) plan.seeds.push_back({ordered(a, b), copies});
  };
  const auto& ids = part.components;

  switch (part.type) {
    case 1:
    case 4: {
      std::vector<int> ys;
      for (int i : ids) {
        close_path(s.at(i), plan);
        ys.push_back(e_nodes(d, s.at(i)).front());
      }
      for (std::size_t a = 0; a < ys.size(); ++a) {
        for (std::size_t b = a + 1; b < ys.size(); ++b) seed(ys[a], ys[b], 1);
      }
      plan.c = static_cast<std::int64_t>(ys.size()) - 1;
      return plan;
    }
    case 2: {
      const int p = *std::find_if(ids.begin(), ids.end(), [&](int i) { return s.path(i); });
      close_path(s.at(p), plan);
      const auto xs = e_nodes(d, s.at(p));
      std::vector<int> ys;
      for (int i : ids) {
        if (i != p) ys.push_back(e_nodes(d, s.at(i)).front());
      }
      const std::int64_t m = static_cast<std::int64_t>(xs.size());
      if (ys.size() == 1) {
        if (m == 1) {
          seed(xs[0], ys[0], 1);
          plan.c = 1;
        } else if (m == 2) {
          seed(xs[0], ys[0], 1);
          seed(xs[0], xs[1], 1);
          plan.c = 2;
        } else {
          seed(xs[0], ys[0], 2);
          seed(xs[0], xs[1], m - 1);
          plan.c = 2 * m;
        }
      } else {
        if (m == 1) {
          seed(xs[0], ys[0], 1);
          seed(xs[0], ys[1], 1);
          seed(ys[0], ys[1], 1);
          plan.c = 2;
        } else if (m == 2) {
          seed(xs[0], ys[0], 1);
          seed(xs[0], ys[1], 1);
          plan.c = 2;
        } else if (m == 3) {
          plan.fallback = true;
          plan.note = "type (2) part with two short cycles and a path through three e nodes has no orbit recipe";
        } else {
          seed(xs[0], ys[0], 2);
          seed(xs[0], ys[1], 2);
          seed(xs[0], xs[1], m - 2);
          plan.c = 2 * m;
        }
      }
      return plan;
    }
    case 3: {
      int br = -1, rb = -1, sc = -1;
      for (int i : ids) {
        if (s.br(i)) br = i;
        if (s.rb(i)) rb = i;
        if (s.short_cycle(i)) sc = i;
      }
      plan.added.emplace_back(s.at(br).nodes.back(), s.at(rb).nodes.front());
      plan.added.emplace_back(s.at(rb).nodes.back(), s.at(br).nodes.front());
      auto xs = e_nodes(d, s.at(br));
      for (int v : e_nodes(d, s.at(rb))) xs.push_back(v);
      const int y = e_nodes(d, s.at(sc)).front();
      const std::int64_t m = static_cast<std::int64_t>(xs.size());
      if (m == 2) {
        seed(y, xs[0], 1);
        seed(xs[0], xs[1], 1);
        plan.c = 2;
      } else {
        seed(y, xs[0], 2);
        seed(xs[0], xs[1], m - 1);
        plan.c = 2 * m;
      }
      return plan;
    }
    default:
      break;
  }

  const bool both_colors = s.colored(ids, Color::kRed) > 0 && s.colored(ids, Color::kBlue) > 0;
  if (part.type == 7 || part.type == 8 || (part.type == 5 && both_colors)) {
    int long_id = -1;
    for (int i : ids) {
      if (!s.at(i).is_short()) long_id = i;
      close_path(s.at(i), plan);
    }
    const auto xs = e_nodes(d, s.at(long_id));
    std::vector<int> ys;
    for (int i : ids) {
      if (i != long_id) ys.push_back(e_nodes(d, s.at(i)).front());
    }
    const std::int64_t m = static_cast<std::int64_t>(xs.size());
    const std::int64_t k = static_cast<std::int64_t>(ys.size());
    const std::int64_t t = m > 2 ? m - k : 4 - 2 * k;
    if (t < 0) throw InternalError("more short cycles than long-cycle edges in a part");
    for (int y : ys) seed(xs[0], y, 2);
    seed(xs[0], xs[1], t);
    plan.c = 2 * m;
    return plan;
  }

  // Type (5) in one color, or type (6): one cycle through every path.
  std::vector<int> chain;
  if (part.type == 5) {
    const int long_id = *std::find_if(ids.begin(), ids.end(), [&](int i) { return !s.at(i).is_short(); });
    chain.push_back(long_id);
    for (int i : ids) {
      if (i != long_id) chain.push_back(i);
    }
  } else {
    int br = -1, rb = -1;
    std::vector<int> shorts;
    for (int i : ids) {
      if (s.br(i) && br < 0) {
        br = i;
      } else if (s.rb(i) && rb < 0) {
        rb = i;
      } else {
        shorts.push_back(i);
      }
    }
    const bool red_shorts = !shorts.empty() && s.start(shorts.front()) == Color::kRed;
    chain.push_back(br);
    if (red_shorts) chain.insert(chain.end(), shorts.begin(), shorts.end());
    chain.push_back(rb);
    if (!red_shorts) chain.insert(chain.end(), shorts.begin(), shorts.end());
  }
  std::vector<int> xs;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const Component& from = s.at(chain[k]);
    const Component& to = s.at(chain[(k + 1) % chain.size()]);
    if (d.color[from.nodes.back()] != d.color[to.nodes.front()]) {
      throw InternalError("single-cycle completion joins different colors");
    }
    plan.added.emplace_back(from.nodes.back(), to.nodes.front());
    for (int v : e_nodes(d, from)) xs.push_back(v);
  }
  const std::size_t m = xs.size();
  seed(xs[0], xs[m / 2], 1);
  plan.c = m % 2 == 1 ? 2 : 1;
  return plan;
}

std::vector<Pair> orbit_of(const std::vector<int>& pi, Pair start) {
  std::vector<Pair> out;
  Pair cur = start;
  do {
    out.push_back(cur);
    cur = ordered(pi[cur.first], pi[cur.second]);
  } while (cur != start);
  std::sort(out.begin(), out.end());
  return out;
}

bool shares_outer_vertex(const WhiteheadGraph& g, const AuxDigraph& d, int x, int y) {
  const Edge& ex = g.edge(d.e_edges[x]);
  const Edge& ey = g.edge(d.e_edges[y]);
  const int ox = ex.other(d.w);
  const int oy = ey.other(d.w);
  return ox == oy && ox != d.w && ox != d.mu_w;
}

void validate_completion(const AuxDigraph& d, const Completion& comp, const WhiteheadGraph* g) {
  const int m = d.m;
  std::vector<int> succ = d.succ;
  for (auto [e, f] : comp.added) {
    const int fn = m + f;
    if (succ[e] != -1 || d.pred[fn] != -1) throw InternalError("completion arc at a node of nonzero degree");
    if (d.color[e] != d.color[fn] || d.color[e] == Color::kNone) throw InternalError("completion arc joins different colors");
    succ[e] = fn;
  }
  std::vector<int> in(d.num_nodes(), 0);
  for (int v = 0; v < d.num_nodes(); ++v) {
    if (succ[v] < 0) throw InternalError("completion leaves a node of out-degree 0");
    ++in[succ[v]];
  }
  if (std::any_of(in.begin(), in.end(), [](int k) { return k != 1; })) throw InternalError("completion in-degrees are not all 1");
  for (int i = 0; i < m; ++i) {
    if (succ[succ[i]] != comp.pi[i]) throw InternalError("pi disagrees with the completion");
  }
  std::vector<std::int64_t> cover(m, 0);
  for (const Orbit& o : comp.orbits) {
    if (o.pairs.empty() || o.copies <= 0) throw InternalError("empty orbit");
    if (orbit_of(comp.pi, o.pairs.front()) != o.pairs) throw InternalError("orbit list entry is not an orbit of pi^(2)");
    for (auto [x, y] : o.pairs) {
      if (x == y) throw InternalError("orbit pair with equal elements");
      if (d.color[x] != Color::kNone && d.color[x] == d.color[y]) {
        throw InternalError("orbit pair shares a vertex outside {w, mu(w)}");
      }
      if (g != nullptr && shares_outer_vertex(*g, d, x, y)) throw InternalError("orbit pair shares a vertex of the graph");
      cover[x] += o.copies;
      cover[y] += o.copies;
    }
  }
  for (std::int64_t k : cover) {
    if (k != comp.c || k <= 0) throw InternalError("orbit list does not cover every e_i equally");
  }
}

}  // namespace

// ---- digraph construction ----

AuxDigraph make_aux_digraph(int m, const std::vector<std::pair<int, int>>& arcs, std::vector<Color> colors) {
  if (m < 1) throw PreconditionError("digraph needs m >= 1");
  if (static_cast<int>(colors.size()) != 2 * m) throw PreconditionError("one color per node required");
  AuxDigraph d;
  d.m = m;
  d.succ.assign(2 * m, -1);
  d.pred.assign(2 * m, -1);
  d.color = std::move(colors);
  for (int i = 0; i < m; ++i) {
    d.succ[m + i] = i;
    d.pred[i] = m + i;
  }
  for (auto [i, j] : arcs) {
    if (i < 0 || i >= m || j < 0 || j >= m) throw PreconditionError("arc index out of range");
    if (d.succ[i] != -1 || d.pred[m + j] != -1) throw PreconditionError("node with two arcs");
    d.succ[i] = m + j;
    d.pred[m + j] = i;
  }
  int red_in = 0, red_out = 0;
  for (int v = 0; v < 2 * m; ++v) {
    const bool end = d.succ[v] == -1 || d.pred[v] == -1;
    if (end && d.color[v] == Color::kNone) throw PreconditionError("path end without a color");
    if (!end && d.color[v] != Color::kNone) throw PreconditionError("interior node with a color");
    if (d.color[v] == Color::kRed) {
      red_in += d.pred[v] == -1;
      red_out += d.succ[v] == -1;
    }
  }
  if (red_in != red_out) throw PreconditionError("red starts and red ends differ in number");
  return d;
}

AuxDigraph build_auxiliary_digraph(const WhiteheadGraph& graph, int w) {
  if (graph.num_vertices() != 4) throw PreconditionError("auxiliary digraph needs a four-vertex graph");
  if (!graph.has_sigma() || !graph.has_full_involution()) throw PreconditionError("graph needs mu and connecting maps");
  const int mw = graph.mu(w);
  int u = 0;
  while (u == w || u == mw) ++u;
  const int mu = graph.mu(u);

  const auto& darts = graph.darts_at(w);
  const int m = static_cast<int>(darts.size());
  std::vector<int> e_edges, f_edges;
  for (int dart : darts) {
    e_edges.push_back(edge_of_dart(dart));
    f_edges.push_back(edge_of_dart(graph.sigma(dart)));
  }
  std::vector<std::pair<int, int>> arcs;
  std::vector<Color> colors(2 * m, Color::kNone);
  int r = 0, b = 0, r2 = 0, b2 = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (e_edges[i] == f_edges[j]) arcs.emplace_back(i, j);
    }
    const int oe = graph.edge(e_edges[i]).other(w);
    if (oe == u) colors[i] = Color::kRed, ++r;
    if (oe == mu) colors[i] = Color::kBlue, ++b;
    const int of = graph.edge(f_edges[i]).other(mw);
    if (of == u) colors[m + i] = Color::kBlue, ++b2;
    if (of == mu) colors[m + i] = Color::kRed, ++r2;
  }
  AuxDigraph d = make_aux_digraph(m, arcs, std::move(colors));
  if (r != r2 || b != b2) throw PreconditionError("edge counts violate r = r' and b = b'");
  if (2 * r > m || 2 * b > m) throw PreconditionError("edge counts violate 2r <= m and 2b <= m");
  d.w = w;
  d.mu_w = mw;
  d.u = u;
  d.mu_u = mu;
  d.e_edges = std::move(e_edges);
  d.f_edges = std::move(f_edges);
  return d;
}

std::vector<Component> components(const AuxDigraph& d) {
  std::vector<char> seen(d.num_nodes(), 0);
  std::vector<Component> out;
  for (int v = 0; v < d.num_nodes(); ++v) {
    if (seen[v]) continue;
    // walk back to a start, or around a cycle
    int start = v;
    while (d.pred[start] != -1 && d.pred[start] != v) start = d.pred[start];
    Component c;
    c.cycle = d.pred[start] != -1;
    if (c.cycle) {
      int lowest = v;
      for (int x = d.succ[v]; x != v; x = d.succ[x]) lowest = std::min(lowest, x);
      start = lowest;
    }
    int x = start;
    do {
      seen[x] = 1;
      c.nodes.push_back(x);
      x = d.succ[x];
    } while (x != -1 && x != start);
    out.push_back(std::move(c));
  }
  for (const Component& c : out) {
    if (c.cycle ? c.nodes.size() % 2 != 0 : c.nodes.size() % 2 != 0) {
      throw PreconditionError("component is neither an odd path nor an even cycle");
    }
  }
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    return *std::min_element(a.nodes.begin(), a.nodes.end()) < *std::min_element(b.nodes.begin(), b.nodes.end());
  });
  return out;
}

bool part_is_good(const AuxDigraph& d, const std::vector<Component>& comps, const std::vector<int>& part) {
  return Shape{d, comps}.good(part);
}

bool matches_type(const AuxDigraph& d, const std::vector<Component>& comps, const GoodPart& part) {
  const Shape s{d, comps};
  const auto& ids = part.components;
  auto count = [&](auto pred) { return std::count_if(ids.begin(), ids.end(), pred); };
  const auto n = static_cast<long>(ids.size());
  auto short_cycles = count([&](int i) { return s.short_cycle(i); });
  switch (part.type) {
    case 1:
      return (n == 2 || (n == 3 && short_cycles == 1)) &&
             count([&](int i) { return s.short_mono_of(i, Color::kRed); }) == 1 &&
             count([&](int i) { return s.short_mono_of(i, Color::kBlue); }) == 1;
    case 2:
      return (n == 2 || n == 3) && short_cycles == n - 1 && count([&](int i) { return s.mono(i); }) == 1;
    case 3:
      return n == 3 && short_cycles == 1 && count([&](int i) { return s.br(i); }) == 1 &&
             count([&](int i) { return s.rb(i); }) == 1;
    case 4:
      return n >= 2 && short_cycles == n;
    case 5:
    case 7: {
      for (int lead : ids) {
        bool ok = part.type == 5 ? s.long_mono(lead) : s.long_cycle(lead);
        if (ok && s.short_monochromatic(without(ids, {lead}))) return true;
      }
      return false;
    }
    case 6: {
      for (int a : ids) {
        for (int b : ids) {
          if (s.br(a) && s.rb(b) && s.short_monochromatic(without(ids, {a, b}))) return true;
        }
      }
      return false;
    }
    case 8:
      return n == 2 && short_cycles == 1 && count([&](int i) { return s.long_cycle(i); }) == 1;
    default:
      return false;
  }
}

std::vector<GoodPart> decompose_good(const AuxDigraph& d) {
  const auto comps = components(d);
  const Shape s{d, comps};
  std::vector<int> all(comps.size());
  std::iota(all.begin(), all.end(), 0);
  if (d.num_nodes() < 4) throw PreconditionError("decomposition needs at least four nodes");
  if (!s.good(all)) throw PreconditionError("digraph is not good");
  std::vector<GoodPart> parts;
  decompose(s, all, parts);

  std::vector<int> used(comps.size(), 0);
  for (auto& p : parts) {
    std::sort(p.components.begin(), p.components.end());
    if (!s.good(p.components)) throw InternalError("part of type (" + std::to_string(p.type) + ") is not good");
    if (!matches_type(d, comps, p)) throw InternalError("part does not have the shape of type (" + std::to_string(p.type) + ")");
    for (int i : p.components) ++used[i];
  }
  if (std::any_of(used.begin(), used.end(), [](int k) { return k != 1; })) {
    throw InternalError("decomposition is not a partition");
  }
  return parts;
}

Completion uniform_permutation(const AuxDigraph& d) {
  const auto comps = components(d);
  const Shape s{d, comps};
  Completion out;
  out.parts = decompose_good(d);
  std::vector<PartPlan> plans;
  for (const auto& part : out.parts) {
    plans.push_back(plan_part(s, part));
    if (plans.back().fallback) {
      out.needs_fallback = true;
      out.note = plans.back().note;
    }
  }
  if (out.needs_fallback) return out;

  std::vector<int> succ = d.succ;
  out.c = 1;
  for (const auto& plan : plans) {
    for (auto [e, f] : plan.added) {
      succ[e] = f;
      out.added.emplace_back(e, f - d.m);
    }
    out.part_constants.push_back(plan.c);
    out.c = std::lcm(out.c, plan.c);
  }
  std::sort(out.added.begin(), out.added.end());
  out.pi.resize(d.m);
  for (int i = 0; i < d.m; ++i) out.pi[i] = succ[succ[i]];
  for (const auto& plan : plans) {
    for (const auto& [pair, copies] : plan.seeds) {
      out.orbits.push_back({orbit_of(out.pi, pair), mul(copies, out.c / plan.c)});
    }
  }
  validate_completion(d, out, nullptr);
  return out;
}

bool is_w_good(const WhiteheadGraph& graph, const AuxDigraph& d, const std::vector<int>& pi) {
  for (int i = 0; i < d.m; ++i) {
    const int e = d.e_edges[i];
    const int image = edge_of_dart(graph.sigma(graph.dart_at(d.w, d.e_edges[pi[i]])));
    if (e == image) continue;
    const Edge& a = graph.edge(e);
    const Edge& b = graph.edge(image);
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
  }
  return true;
}

// ---- inductive construction ----

namespace {

struct Inductive {
  const WhiteheadGraph& g;
  const AuxDigraph& d;
  const Completion& comp;
  std::vector<LevelRecord> levels;

  int degree(const std::vector<char>& active, int v) const {
    int k = 0;
    for (int dart : g.darts_at(v)) k += active[edge_of_dart(dart)];
    return k;
  }

  std::vector<int> active_at(const std::vector<char>& active, int v) const {
    std::vector<int> out;
    for (int dart : g.darts_at(v)) {
      if (active[edge_of_dart(dart)]) out.push_back(edge_of_dart(dart));
    }
    return out;
  }

  int sigma_pi(int node) const {
    return edge_of_dart(g.sigma(g.dart_at(d.w, d.e_edges[comp.pi[node]])));
  }

  void check(const std::vector<char>& active, const CycleList& list, std::int64_t c1, std::int64_t c2) const {
    const auto counts = pair_counts(list);
    auto count = [&](int v, int e, int f) -> std::int64_t {
      auto it = counts.find({v, std::min(e, f), std::max(e, f)});
      return it == counts.end() ? 0 : it->second;
    };
    const auto& at_w = g.darts_at(d.w);
    for (std::size_t i = 0; i < at_w.size(); ++i) {
      for (std::size_t j = i + 1; j < at_w.size(); ++j) {
        const int e = edge_of_dart(at_w[i]);
        const int f = edge_of_dart(at_w[j]);
        if (count(d.w, e, f) != count(d.mu_w, edge_of_dart(g.sigma(at_w[i])), edge_of_dart(g.sigma(at_w[j])))) {
          throw InternalError("property (a) fails at w");
        }
      }
    }
    const auto usage = list.edge_usage();
    for (int e = 0; e < g.num_edges(); ++e) {
      auto it = usage.find(e);
      const std::int64_t used = it == usage.end() ? 0 : it->second;
      if (used != (active[e] ? c1 : 0)) throw InternalError("property (b) fails on edge " + std::to_string(e));
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (v == d.w || v == d.mu_w) continue;
      const auto es = active_at(active, v);
      for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
          if (count(v, es[i], es[j]) != c2) throw InternalError("property (c) fails at " + g.vertex_name(v));
        }
      }
    }
    if (!list.has_long_cycle()) throw InternalError("property (d) fails: no long cycle");
    if (c1 <= 0 || c2 <= 0) throw InternalError("nonpositive constants");
  }

  void add(CycleList& list, std::vector<int> edges, std::int64_t copies) const {
    list.add(make_cycle(g, std::move(edges)), copies);
  }

  GoodList run(std::vector<char> active) {
    if (!is_w_good(g, d, comp.pi)) throw InternalError("permutation is not w-good");
    int u = 0;
    while (u == d.w || u == d.mu_w) ++u;
    const int mu = g.mu(u);
    const int dw = degree(active, d.w);
    const int du = degree(active, u);
    if (du < dw) throw PreconditionError("w is not of minimum degree");

    GoodList out;
    LevelRecord rec;
    rec.u = u;
    if (du == dw) {
      std::vector<int> keep;
      for (int e = 0; e < g.num_edges(); ++e) {
        if (active[e]) keep.push_back(e);
      }
      const WhiteheadGraph sub = g.edge_subgraph(keep);
      const RegularWitness base = regular_witness(sub);
      for (const auto& entry : base.cycles.entries()) {
        std::vector<int> edges;
        for (int e : entry.cycle.edges) edges.push_back(keep[e]);
        add(out.cycles, edges, entry.multiplicity);
      }
      out.c1 = base.m1;
      out.c2 = base.m2;
    } else {
      int e = -1;
      for (int id : active_at(active, u)) {
        if (g.edge(id).other(u) == mu) {
          e = id;
          break;
        }
      }
      if (e < 0) {
        throw PreconditionError("no edge joins " + g.vertex_name(u) + " and " + g.vertex_name(mu) +
                                " although deg(u) > deg(w)");
      }
      std::vector<char> rest = active;
      rest[e] = 0;
      {
        std::vector<int> keep;
        for (int id = 0; id < g.num_edges(); ++id) {
          if (rest[id]) keep.push_back(id);
        }
        if (!g.edge_subgraph(keep).connected()) throw PreconditionError("removing a u - mu(u) edge disconnects the graph");
      }
      const GoodList inner = run(rest);

      CycleList pairs_list;
      for (const Orbit& o : comp.orbits) {
        for (auto [x, y] : o.pairs) {
          const int ex = d.e_edges[x];
          const int ey = d.e_edges[y];
          const bool x_mw = g.edge(ex).other(d.w) == d.mu_w;
          const bool y_mw = g.edge(ey).other(d.w) == d.mu_w;
          if (x_mw && y_mw) {
            add(pairs_list, {ex, ey}, o.copies);
          } else if (!x_mw && !y_mw) {
            add(pairs_list, {e, ex, ey}, o.copies);
            add(pairs_list, {e, sigma_pi(x), sigma_pi(y)}, o.copies);
          } else {
            const int plain = x_mw ? y : x;
            add(pairs_list, {e, ex, ey, sigma_pi(plain)}, o.copies);
          }
        }
      }
      int a = 0, b = 0;
      for (int id : active_at(active, u)) {
        const int other = g.edge(id).other(u);
        a += other == d.w || other == d.mu_w;
        b += other == mu;
      }
      const std::int64_t c = comp.c;
      out.cycles.append(pairs_list, inner.c2);
      out.cycles.append(inner.cycles, c);
      for (int f : active_at(active, u)) {
        if (f != e && g.edge(f).other(u) == mu) add(out.cycles, {e, f}, mul(c, inner.c2));
      }
      out.c2 = mul(c, inner.c2);
      out.c1 = mul(out.c2, a + b - 1);
      rec.removed_edge = e;
      rec.a = a;
      rec.b = b;
    }
    check(active, out.cycles, out.c1, out.c2);
    rec.c1 = out.c1;
    rec.c2 = out.c2;
    levels.push_back(rec);
    out.long_cycle = true;
    return out;
  }
};

}  // namespace

GoodList inductive_witness(const WhiteheadGraph& graph, const AuxDigraph& d, const Completion& completion) {
  if (graph.num_vertices() != 4 || d.w < 0) throw PreconditionError("inductive construction needs a graph-built digraph");
  if (completion.needs_fallback) throw PreconditionError("completion has no orbit list: " + completion.note);
  Inductive ind{graph, d, completion, {}};
  GoodList out = ind.run(std::vector<char>(graph.num_edges(), 1));
  out.levels.assign(ind.levels.rbegin(), ind.levels.rend());
  return out;
}

FourVertexResult four_vertex_witness(const WhiteheadGraph& graph) {
  if (graph.num_vertices() != 4) throw PreconditionError("graph must have four vertices");
  if (!graph.has_full_involution() || !graph.has_sigma()) throw PreconditionError("graph needs mu and connecting maps");
  if (!graph.connected()) throw PreconditionError("graph is disconnected");
  for (int v = 0; v < 4; ++v) {
    const int lambda = local_edge_connectivity(graph, v, graph.mu(v));
    if (lambda != graph.degree(v)) {
      throw PreconditionError("lambda(" + graph.vertex_name(v) + ", " + graph.vertex_name(graph.mu(v)) + ") = " +
                              std::to_string(lambda) + " < " + std::to_string(graph.degree(v)) + " = deg(" +
                              graph.vertex_name(v) + ")");
    }
  }
  FourVertexResult out;
  out.w = 0;
  for (int v = 1; v < 4; ++v) {
    if (graph.degree(v) < graph.degree(out.w)) out.w = v;
  }
  out.digraph = build_auxiliary_digraph(graph, out.w);
  out.completion = uniform_permutation(out.digraph);
  if (out.completion.needs_fallback) {
    LpSearchResult lp = search_witness_lp(graph, true);
    if (!lp.feasible) throw InternalError("LP fallback found no witness");
    out.witness = lp.witness;
    out.used_lp_fallback = true;
    return out;
  }
  validate_completion(out.digraph, out.completion, &graph);
  out.good = inductive_witness(graph, out.digraph, out.completion);
  out.witness = out.good.cycles;
  if (!verify_witness(graph, out.witness, true).pass) throw InternalError("four-vertex witness fails verification");
  return out;
}

}  // namespace polywit
