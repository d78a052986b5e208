// Copyright 2026 The Authors.
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

// Transversal systems of bipartite graphs: a subset of the left class V is
// independent when it is matchable into the right class W.
//
// On a tree rooted in W every v in V has one upward neighbour (its parent)
// and some downward neighbours (its children). `tree_maximal_extension`
// runs the stage construction m^0, m^1, ... that extends an independent I
// to a maximal one and keeps every stage for inspection.
//
//   bigraph v1
//   left <id>
//   right <id>
//   root <id>        # optional, a right vertex
//   edge <left> <right>

#ifndef GAMMOID_TRANSVERSAL_HPP_
#define GAMMOID_TRANSVERSAL_HPP_

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammoid/dimaze.hpp"
#include "gammoid/io.hpp"
#include "json.hpp"

namespace gammoid {

/// Left and right vertices are indexed separately, each in identifier order.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  BipartiteGraph(std::vector<std::string> left, std::vector<std::string> right,
                 const std::vector<std::pair<std::string, std::string>>& edges,
                 std::optional<std::string> root = std::nullopt) {
    auto normalize = [](std::vector<std::string>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    normalize(left);
    normalize(right);
    for (const auto& id : left) {
      if (std::binary_search(right.begin(), right.end(), id)) {
        throw ContractViolation("vertex " + id + " is on both sides");
      }
    }
    left_ = std::move(left);
    right_ = std::move(right);
    adj_left_.assign(left_.size(), {});
    adj_right_.assign(right_.size(), {});
    for (const auto& [l, r] : edges) {
      const Vertex v = left_at(l);
      const Vertex w = right_at(r);
      edges_.emplace_back(v, w);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [v, w] : edges_) {
      adj_left_[v].push_back(w);
      adj_right_[w].push_back(v);
    }
    for (auto& a : adj_right_) std::sort(a.begin(), a.end());
    if (root) root_ = right_at(*root);
  }

  std::size_t left_size() const { return left_.size(); }
  std::size_t right_size() const { return right_.size(); }
  const std::string& left_name(Vertex v) const { return left_.at(v); }
  const std::string& right_name(Vertex w) const { return right_.at(w); }
  const std::vector<std::string>& left_names() const { return left_; }
  const std::vector<std::string>& right_names() const { return right_; }

  std::optional<Vertex> find_left(std::string_view id) const {
    return Find(left_, id);
  }
  std::optional<Vertex> find_right(std::string_view id) const {
    return Find(right_, id);
  }
  Vertex left_at(std::string_view id) const {
    auto v = find_left(id);
    if (!v) throw ReferenceError("unknown left vertex " + std::string(id));
    return *v;
  }
  Vertex right_at(std::string_view id) const {
    auto w = find_right(id);
    if (!w) throw ReferenceError("unknown right vertex " + std::string(id));
    return *w;
  }

  const std::vector<Vertex>& left_neighbors(Vertex v) const {
    return adj_left_[v];
  }
  const std::vector<Vertex>& right_neighbors(Vertex w) const {
    return adj_right_[w];
  }
  /// Sorted (left, right) pairs.
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<Vertex> root() const { return root_; }

  VertexSet left_ids(const std::vector<std::string>& ids) const {
    VertexSet out;
    for (const auto& id : ids) out.insert(left_at(id));
    return out;
  }
  std::vector<std::string> left_names(const VertexSet& s) const {
    std::vector<std::string> out;
    for (Vertex v : s) out.push_back(left_[v]);
    return out;
  }

  friend bool operator==(const BipartiteGraph&,
                         const BipartiteGraph&) = default;

 private:
  static std::optional<Vertex> Find(const std::vector<std::string>& names,
                                    std::string_view id) {
    auto it = std::lower_bound(names.begin(), names.end(), id);
    if (it == names.end() || *it != id) return std::nullopt;
    return static_cast<Vertex>(it - names.begin());
  }

  std::vector<std::string> left_;
  std::vector<std::string> right_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_left_;
  std::vector<std::vector<Vertex>> adj_right_;
  std::optional<Vertex> root_;
};

inline BipartiteGraph parse_bigraph(std::string_view text) {
  auto lines = detail::TokenizeLines(text);
  detail::ExpectHeader(lines, "bigraph");
  std::vector<std::string> left, right;
  std::optional<std::string> root;
  std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, t] = lines[i];
    if (t[0] == "left" && t.size() == 2) {
      left.push_back(t[1]);
    } else if (t[0] == "right" && t.size() == 2) {
      right.push_back(t[1]);
    } else if (t[0] == "root" && t.size() == 2 && !root) {
      root = t[1];
    } else if (t[0] == "edge" && t.size() == 3) {
      edges.push_back({number, {t[1], t[2]}});
    } else {
      throw ParseError(number, "malformed line '" + detail::Join(t, " ") + "'");
    }
  }
  std::vector<std::pair<std::string, std::string>> plain;
  std::set<std::string> l(left.begin(), left.end());
  std::set<std::string> r(right.begin(), right.end());
  for (const auto& [number, e] : edges) {
    if (!l.count(e.first)) {
      throw ReferenceError("line " + std::to_string(number) +
                           ": unknown left vertex " + e.first);
    }
    if (!r.count(e.second)) {
      throw ReferenceError("line " + std::to_string(number) +
                           ": unknown right vertex " + e.second);
    }
    plain.push_back(e);
  }
  if (root && !r.count(*root)) {
    throw ReferenceError("root " + *root + " is not a right vertex");
  }
  return BipartiteGraph(std::move(left), std::move(right), plain, root);
}

inline std::string serialize(const BipartiteGraph& g) {
  std::string out = "bigraph v1\n";
  for (const auto& n : g.left_names()) out += "left " + n + "\n";
  for (const auto& n : g.right_names()) out += "right " + n + "\n";
  if (g.root()) out += "root " + g.right_name(*g.root()) + "\n";
  for (auto [v, w] : g.edges()) {
    out += "edge " + g.left_name(v) + " " + g.right_name(w) + "\n";
  }
  return out;
}

inline nlohmann::json to_json(const BipartiteGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [v, w] : g.edges()) {
    edges.push_back({g.left_name(v), g.right_name(w)});
  }
  nlohmann::json out = {{"left", g.left_names()},
                        {"right", g.right_names()},
                        {"edges", edges}};
  out["root"] = g.root() ? nlohmann::json(g.right_name(*g.root())) : nullptr;
  return out;
}

inline std::string to_dot(const BipartiteGraph& g) {
  std::string out = "graph bigraph {\n";
  for (const auto& n : g.left_names()) out += "  " + dot_quote(n) + ";\n";
  for (const auto& n : g.right_names()) {
    out += "  " + dot_quote(n) + " [shape=box];\n";
  }
  for (auto [v, w] : g.edges()) {
    out += "  " + dot_quote(g.left_name(v)) + " -- " +
           dot_quote(g.right_name(w)) + ";\n";
  }
  return out + "}\n";
}

/// Left vertex -> right vertex.
using Matching = std::map<Vertex, Vertex>;

inline bool is_matching(const BipartiteGraph& g, const Matching& m) {
  std::set<Vertex> used;
  for (auto [v, w] : m) {
    if (v >= g.left_size() || w >= g.right_size()) return false;
    const auto& adj = g.left_neighbors(v);
    if (!std::binary_search(adj.begin(), adj.end(), w)) return false;
    if (!used.insert(w).second) return false;
  }
  return true;
}

inline VertexSet matched_left(const Matching& m) {
  VertexSet out;
  for (auto [v, w] : m) out.insert(v);
  return out;
}

inline VertexSet matched_right(const Matching& m) {
  VertexSet out;
  for (auto [v, w] : m) out.insert(w);
  return out;
}

namespace detail {

/// Kuhn's augmenting-path step from `v`, trying right vertices in order.
inline bool TryMatch(const BipartiteGraph& g, Vertex v,
                     std::vector<std::optional<Vertex>>& owner,
                     std::vector<bool>& visited,
                     const std::set<Edge>* banned) {
  for (Vertex w : g.left_neighbors(v)) {
    if (visited[w] || (banned && banned->count({v, w}))) continue;
    visited[w] = true;
    if (!owner[w] || TryMatch(g, *owner[w], owner, visited, banned)) {
      owner[w] = v;
      return true;
    }
  }
  return false;
}

inline std::optional<Matching> MatchAll(const BipartiteGraph& g,
                                        const VertexSet& set,
                                        const std::set<Edge>* banned = nullptr) {
  std::vector<std::optional<Vertex>> owner(g.right_size());
  for (Vertex v : set) {
    if (v >= g.left_size()) throw ContractViolation("left vertex out of range");
    std::vector<bool> visited(g.right_size(), false);
    if (!TryMatch(g, v, owner, visited, banned)) return std::nullopt;
  }
  Matching m;
  for (Vertex w = 0; w < g.right_size(); ++w) {
    if (owner[w]) m[*owner[w]] = w;
  }
  return m;
}

}  // namespace detail

struct Matchability {
  bool independent = false;
  Matching witness;
};

inline Matchability mt_is_independent(const BipartiteGraph& g,
                                      const VertexSet& set) {
  auto m = detail::MatchAll(g, set);
  if (!m) return {};
  return {true, std::move(*m)};
}

inline bool mt_is_maximal(const BipartiteGraph& g, const VertexSet& set) {
  if (!mt_is_independent(g, set).independent) return false;
  for (Vertex v = 0; v < g.left_size(); ++v) {
    if (!set.count(v) && mt_is_independent(g, with(set, v)).independent) {
      return false;
    }
  }
  return true;
}

struct MtAugmentation {
  Vertex y = 0;
  Vertex x = 0;               // start of the m-m' alternating path
  std::vector<Vertex> path;   // x, w0, v1, w1, ..., y (left/right alternate)
  Matching matching;          // of I + y
};

/// For independent non-maximal I and maximal B, returns y in B\I with I+y
/// independent, read off an m-m' alternating path.
inline MtAugmentation mt_augment(const BipartiteGraph& g, const VertexSet& i_set,
                                 const VertexSet& b_set) {
  auto mi = mt_is_independent(g, i_set);
  if (!mi.independent) throw ContractViolation("I is not independent");
  if (!mt_is_maximal(g, b_set)) {
    throw ContractViolation("B is not maximally independent");
  }
  if (mt_is_maximal(g, i_set)) {
    throw ContractViolation("I is already maximal");
  }
  const VertexSet b_minus_i = set_minus(b_set, i_set);
  MtAugmentation out;
  auto direct = [&](Vertex y) {
    auto m = mt_is_independent(g, with(i_set, y));
    if (!m.independent) return false;
    out.x = out.y = y;
    out.path = {y};
    out.matching = std::move(m.witness);
    return true;
  };
  if (direct(*b_minus_i.begin())) return out;

  const Matching m_prime = mt_is_independent(g, b_set).witness;
  std::map<Vertex, Vertex> owner_prime;  // right -> left under m'
  for (auto [v, w] : m_prime) owner_prime[w] = v;
  for (Vertex x = 0; x < g.left_size(); ++x) {
    if (i_set.count(x) || b_set.count(x)) continue;
    auto mx = mt_is_independent(g, with(i_set, x));
    if (!mx.independent) continue;
    Matching m = mx.witness;
    std::vector<Vertex> path{x};
    Vertex v = x;
    while (true) {
      const Vertex w = m.at(v);
      path.push_back(w);
      auto it = owner_prime.find(w);
      if (it == owner_prime.end()) {
        throw InternalError("alternating path ends unmatched in B's matching");
      }
      v = it->second;
      path.push_back(v);
      if (!i_set.count(v)) break;
      if (path.size() > 2 * g.left_size() + 2) {
        throw InternalError("alternating path does not terminate");
      }
    }
    // m Delta E(P): each left vertex on P after x takes its m'-edge.
    m.erase(x);
    for (std::size_t k = 2; k < path.size(); k += 2) {
      m[path[k]] = path[k - 1];
    }
    out.x = x;
    out.y = v;
    out.path = std::move(path);
    out.matching = std::move(m);
    if (!is_matching(g, out.matching) ||
        matched_left(out.matching) != with(i_set, out.y)) {
      throw InternalError("exchanged edge set is not a matching of I+y");
    }
    return out;
  }
  for (Vertex y : b_minus_i) {
    if (direct(y)) return out;
  }
  throw InternalError("no element of B\\I extends I");
}

/// Parent/child structure of a bipartite tree rooted in W.
struct RootedTree {
  std::vector<Vertex> parent_of_left;                  // always in W
  std::vector<std::vector<Vertex>> children_of_left;   // in W, sorted
  std::vector<std::optional<Vertex>> parent_of_right;  // none for the root
  std::vector<std::vector<Vertex>> children_of_right;  // in V, sorted
};

/// Throws ModeError unless `g` is a tree with a root in W.
inline RootedTree root_tree(const BipartiteGraph& g) {
  if (!g.root()) throw ModeError("tree mode needs a root in W");
  const std::size_t nl = g.left_size();
  const std::size_t nr = g.right_size();
  if (g.edges().size() + 1 != nl + nr) {
    throw ModeError("graph is not a tree: " + std::to_string(nl + nr) +
                    " vertices and " + std::to_string(g.edges().size()) +
                    " edges");
  }
  RootedTree t;
  t.parent_of_left.assign(nl, 0);
  t.children_of_left.assign(nl, {});
  t.parent_of_right.assign(nr, std::nullopt);
  t.children_of_right.assign(nr, {});
  std::vector<bool> seen_l(nl, false), seen_r(nr, false);
  // Entries: (is_right, index).
  std::deque<std::pair<bool, Vertex>> queue{{true, *g.root()}};
  seen_r[*g.root()] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    auto [is_right, u] = queue.front();
    queue.pop_front();
    if (is_right) {
      for (Vertex v : g.right_neighbors(u)) {
        if (seen_l[v]) continue;
        seen_l[v] = true;
        ++reached;
        t.parent_of_left[v] = u;
        t.children_of_right[u].push_back(v);
        queue.push_back({false, v});
      }
    } else {
      for (Vertex w : g.left_neighbors(u)) {
        if (seen_r[w]) continue;
        seen_r[w] = true;
        ++reached;
        t.parent_of_right[w] = u;
        t.children_of_left[u].push_back(w);
        queue.push_back({true, w});
      }
    }
  }
  if (reached != nl + nr) throw ModeError("graph is not connected");
  return t;
}

struct StageState {
  int alpha = 0;
  Matching m;       // m^alpha
  VertexSet i;      // I^alpha
  VertexSet w;      // W^alpha
  VertexSet c;      // C^alpha
  VertexSet s;      // S^alpha
  std::vector<std::vector<Vertex>> paths;  // P_v as v0, w0, v1, ..., r_v
};

struct TreeExtension {
  VertexSet base;      // B
  Matching matching;   // m^B
  int gamma = 0;
  VertexSet c_union;   // C
  VertexSet u;         // U
  std::vector<StageState> stages;     // stages 0..gamma
  std::vector<std::string> violations;  // empty when every check holds
};

namespace detail {

inline std::string PathText(const BipartiteGraph& g,
                            const std::vector<Vertex>& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += ">";
    out += k % 2 == 0 ? g.left_name(p[k]) : g.right_name(p[k]);
  }
  return out;
}

}  // namespace detail

/// Problems with the P_v family of one stage; empty when A(alpha) holds.
inline std::vector<std::string> stage_path_problems(const BipartiteGraph& g,
                                                    const RootedTree& t,
                                                    const VertexSet& i_set,
                                                    const StageState& st) {
  std::vector<std::string> problems;
  std::set<Vertex> left_used, right_used;
  std::map<Vertex, Vertex> owner;
  for (auto [v, w] : st.m) owner[w] = v;
  const VertexSet expected = set_minus(set_intersection(i_set, st.c), st.s);
  VertexSet starts;
  for (const auto& p : st.paths) {
    const std::string text = detail::PathText(g, p);
    if (p.size() < 3 || p.size() % 2 == 0) {
      problems.push_back("path " + text + " has the wrong shape");
      continue;
    }
    starts.insert(p.front());
    if (st.m.count(p.front())) {
      problems.push_back("path " + text + " starts at a matched vertex");
    }
    for (std::size_t k = 0; k < p.size(); ++k) {
      auto& used = k % 2 == 0 ? left_used : right_used;
      if (!used.insert(p[k]).second) {
        problems.push_back("paths meet at " + (k % 2 == 0
                                                   ? g.left_name(p[k])
                                                   : g.right_name(p[k])));
      }
    }
    for (std::size_t k = 0; k + 1 < p.size(); k += 2) {
      const auto& kids = t.children_of_left[p[k]];
      if (!std::binary_search(kids.begin(), kids.end(), p[k + 1])) {
        problems.push_back("path " + text + " leaves " + g.left_name(p[k]) +
                           " by a non-downward edge");
      }
      auto it = owner.find(p[k + 1]);
      if (it == owner.end() || it->second != p[k + 2]) {
        problems.push_back("path " + text + " uses a non-matching edge at " +
                           g.right_name(p[k + 1]));
      }
      if (k > 0 && !i_set.count(p[k])) {
        problems.push_back("path " + text + " passes a vertex outside I");
      }
    }
    if (i_set.count(p.back()) || !st.m.count(p.back())) {
      problems.push_back("path " + text + " does not end in I^alpha\\I");
    }
  }
  if (starts != expected) {
    problems.push_back("stage " + std::to_string(st.alpha) +
                       " paths do not start exactly at I cap C minus S");
  }
  return problems;
}

/// Extends an independent I to a maximal independent B by the stage
/// construction on a tree rooted in W.
inline TreeExtension tree_maximal_extension(const BipartiteGraph& g,
                                            const VertexSet& i_set) {
  const RootedTree t = root_tree(g);
  auto base_match = mt_is_independent(g, i_set);
  if (!base_match.independent) throw ContractViolation("I is not independent");
  const std::size_t nl = g.left_size();
  TreeExtension out;

  // m^0: upward edges lying in every matching of I.
  StageState st;
  for (Vertex v : i_set) {
    const std::set<Edge> banned{{v, t.parent_of_left[v]}};
    if (!detail::MatchAll(g, i_set, &banned)) st.m[v] = t.parent_of_left[v];
  }

  std::vector<bool> in_some_c(nl, false);
  std::vector<bool> covered_before(nl, false);  // N_down(v) within W^(alpha-1)
  auto children_covered = [&](Vertex v, const VertexSet& w_set) {
    for (Vertex w : t.children_of_left[v]) {
      if (!w_set.count(w)) return false;
    }
    return true;
  };

  for (int alpha = 0;; ++alpha) {
    if (alpha > static_cast<int>(nl) + 1) {
      throw InternalError("stages did not terminate");
    }
    st.alpha = alpha;
    st.i = matched_left(st.m);
    st.w = matched_right(st.m);
    st.c.clear();
    st.s.clear();
    st.paths.clear();
    for (Vertex v = 0; v < nl; ++v) {
      const bool covered = children_covered(v, st.w);
      if (!st.i.count(v) && covered && !covered_before[v]) st.c.insert(v);
    }
    for (Vertex v = 0; v < nl; ++v) {
      covered_before[v] = children_covered(v, st.w);
    }
    if (st.c.empty()) {
      out.stages.push_back(st);
      out.gamma = alpha;
      break;
    }
    for (Vertex v : st.c) in_some_c[v] = true;
    for (Vertex w = 0; w < g.right_size(); ++w) {
      if (st.w.count(w)) continue;
      for (Vertex v : t.children_of_right[w]) {
        if (st.c.count(v)) {
          st.s.insert(v);
          break;
        }
      }
    }
    std::map<Vertex, Vertex> owner;
    for (auto [v, w] : st.m) owner[w] = v;
    const VertexSet& w0 = out.stages.empty() ? st.w : out.stages.front().w;
    for (Vertex v : set_minus(set_intersection(i_set, st.c), st.s)) {
      std::vector<Vertex> p{v};
      Vertex cur = v;
      while (true) {
        std::optional<Vertex> down;
        for (Vertex w : t.children_of_left[cur]) {
          if (!w0.count(w)) {
            down = w;
            break;
          }
        }
        if (!down || !owner.count(*down)) {
          out.violations.push_back("no downward continuation at " +
                                   g.left_name(cur));
          break;
        }
        p.push_back(*down);
        cur = owner[*down];
        p.push_back(cur);
        if (!i_set.count(cur)) break;
        if (p.size() > 2 * nl + 1) {
          throw InternalError("stage path does not terminate");
        }
      }
      st.paths.push_back(std::move(p));
    }
    for (auto& problem : stage_path_problems(g, t, i_set, st)) {
      out.violations.push_back(std::move(problem));
    }
    out.stages.push_back(st);

    // m^(alpha+1) = E(S, N_up(S)) + (m^alpha Delta E(P)).
    Matching next = st.m;
    for (const auto& p : st.paths) {
      next.erase(p.back());
      for (std::size_t k = 0; k + 1 < p.size(); k += 2) next[p[k]] = p[k + 1];
    }
    for (Vertex v : st.s) next[v] = t.parent_of_left[v];
    if (!is_matching(g, next)) {
      out.violations.push_back("m^" + std::to_string(alpha + 1) +
                               " is not a matching");
    }
    st = StageState{};
    st.m = std::move(next);
  }

  // Stage invariants across the history.
  for (std::size_t a = 1; a < out.stages.size(); ++a) {
    const auto& prev = out.stages[a - 1];
    const auto& cur = out.stages[a];
    if (!is_subset(prev.w, cur.w)) {
      out.violations.push_back("W shrank at stage " + std::to_string(a));
    }
    if (!is_subset(set_intersection(prev.i, i_set),
                   set_intersection(cur.i, i_set))) {
      out.violations.push_back("I^alpha cap I shrank at stage " +
                               std::to_string(a));
    }
  }
  auto is_upward = [&](Vertex v, Vertex w) {
    return t.parent_of_left[v] == w;
  };
  for (Vertex v : i_set) {
    int changes = 0;
    std::optional<Vertex> last;
    for (const auto& s : out.stages) {
      auto it = s.m.find(v);
      if (it == s.m.end()) continue;
      if (last && *last != it->second) {
        ++changes;
        if (!is_upward(v, *last) || is_upward(v, it->second)) {
          out.violations.push_back(g.left_name(v) +
                                   " flipped other than upward to downward");
        }
      }
      last = it->second;
    }
    if (changes > 1) {
      out.violations.push_back(g.left_name(v) + " changed partner twice");
    }
  }
  for (Vertex w = 0; w < g.right_size(); ++w) {
    int changes = 0;
    std::optional<Vertex> last;
    for (const auto& s : out.stages) {
      std::optional<Vertex> partner;
      for (auto [v, x] : s.m) {
        if (x == w) partner = v;
      }
      if (!partner) continue;
      if (last && *last != *partner) {
        ++changes;
        if (!is_upward(*last, w) || is_upward(*partner, w)) {
          out.violations.push_back(g.right_name(w) +
                                   " flipped other than upward to downward");
        }
      }
      last = partner;
    }
    if (changes > 1) {
      out.violations.push_back(g.right_name(w) + " changed partner twice");
    }
  }

  // Assembly: B = U + I^gamma, U matched downwards outside W^gamma.
  const StageState& last = out.stages.back();
  const VertexSet i0 = out.stages.front().i;
  for (Vertex v = 0; v < nl; ++v) {
    if (in_some_c[v]) out.c_union.insert(v);
  }
  out.matching = last.m;
  for (Vertex v = 0; v < nl; ++v) {
    if (i0.count(v) || in_some_c[v]) continue;
    out.u.insert(v);
    std::optional<Vertex> down;
    for (Vertex w : t.children_of_left[v]) {
      if (!last.w.count(w)) {
        down = w;
        break;
      }
    }
    if (!down) {
      out.violations.push_back(g.left_name(v) +
                               " in U has no child outside W^gamma");
      continue;
    }
    out.matching[v] = *down;
  }
  out.base = set_union(out.u, last.i);
  if (!is_matching(g, out.matching) ||
      matched_left(out.matching) != out.base) {
    out.violations.push_back("m^B is not a matching of B");
  }
  if (!is_subset(i_set, out.base)) {
    out.violations.push_back("B does not contain I");
  }
  if (!mt_is_maximal(g, out.base)) {
    out.violations.push_back("B is not maximal");
  }
  return out;
}

/// The tree bipartite graph whose transversal system matches the
/// linkability system of a dimaze on a tree: exits form W, every exit b also
/// gets a left copy b' joined to it, and the least exit is the root.
inline BipartiteGraph dimaze_tree_to_bipartite(const Dimaze& d) {
  if (!d.valid()) throw ModeError("dimaze is invalid: " + validate(d).front());
  if (d.exits().empty()) throw ModeError("dimaze has no exits to root at");
  std::vector<std::string> left, right;
  std::vector<std::pair<std::string, std::string>> edges;
  for (Vertex v = 0; v < d.size(); ++v) {
    if (d.is_exit(v)) {
      const std::string copy = d.name(v) + "'";
      if (d.find(copy)) {
        throw ModeError("copy name " + copy + " is already a vertex");
      }
      right.push_back(d.name(v));
      left.push_back(copy);
      edges.emplace_back(copy, d.name(v));
    } else {
      left.push_back(d.name(v));
    }
  }
  for (auto [tail, head] : d.edges()) {
    if (d.is_exit(tail) || !d.is_exit(head)) {
      throw ModeError("edge " + d.name(tail) + " -> " + d.name(head) +
                      " does not run from a non-exit to an exit");
    }
    edges.emplace_back(d.name(tail), d.name(head));
  }
  // Underlying tree: the edges of d must number |V| - 1 and connect.
  if (d.edges().size() + 1 != d.size()) {
    throw ModeError("underlying graph is not a tree");
  }
  BipartiteGraph g(std::move(left), std::move(right), edges,
                   d.name(*d.exits().begin()));
  root_tree(g);
  return g;
}

}  // namespace gammoid

#endif  // GAMMOID_TRANSVERSAL_HPP_
