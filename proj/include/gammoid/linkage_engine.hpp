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

// Alternating-walk augmentation of linkages and the independence oracle of
// the linkability system built on it.
//
// An alternating walk with respect to a linkage P starts at a vertex of
// X outside V(P), or at a vertex of X inside a path of P other than its
// initial vertex with a first step back along that path. It traverses edges of P backwards and all other edges
// forwards, may revisit only vertices of P, and at every vertex of P
// (except the last vertex of the walk) uses at least one edge of P. A walk
// that ends at an exit outside V(P) yields a linkage with one more path;
// when none exists, the last vertex of each path of P that some walk
// reaches forms an X--B0 separator on P.

#ifndef GAMMOID_LINKAGE_ENGINE_HPP_
#define GAMMOID_LINKAGE_ENGINE_HPP_

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gammoid/dimaze.hpp"

namespace gammoid {

/// v0 e0 v1 ... e(n-1) vn. `edges[i]` is stored as the dimaze edge
/// (tail, head), so a backward step has edges[i] == (v(i+1), v(i)).
struct AlternatingWalk {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  friend bool operator==(const AlternatingWalk&,
                         const AlternatingWalk&) = default;
};

/// An X--B0 separator with exactly one vertex on each path of `linkage`.
struct SeparatorOnLinkage {
  VertexSet separator;
  Linkage linkage;
};

struct AugmentedLinkage {
  Linkage linkage;
  AlternatingWalk walk;
};

using AugmentResult = std::variant<AugmentedLinkage, SeparatorOnLinkage>;

/// Everything wrong with `walk` as an alternating walk from `sources` with
/// respect to `link`; empty when it is one.
inline std::vector<std::string> walk_problems(const Dimaze& d,
                                              const VertexSet& sources,
                                              const Linkage& link,
                                              const AlternatingWalk& walk) {
  std::vector<std::string> problems;
  const auto& vs = walk.vertices;
  const auto& es = walk.edges;
  if (vs.empty() || vs.size() != es.size() + 1) {
    problems.push_back("walk must have one more vertex than edges");
    return problems;
  }
  const VertexSet on_link = link.vertices();
  const auto link_edges = link.edges();
  const VertexSet ini = link.ini();
  if (!sources.count(vs[0]) || ini.count(vs[0])) {
    problems.push_back("walk does not start in X outside Ini of the linkage");
  } else if (on_link.count(vs[0]) &&
             (es.empty() || !link_edges.count(es[0]))) {
    problems.push_back("walk starting on the linkage does not step back");
  }
  std::set<Edge> seen_edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Edge e = es[i];
    if (!d.has_edge(e.first, e.second)) {
      problems.push_back("step " + std::to_string(i) + " uses a non-edge");
      continue;
    }
    if (!seen_edges.insert(e).second) {
      problems.push_back("edge repeated at step " + std::to_string(i));
    }
    const bool in_link = link_edges.count(e) != 0;
    const Edge forward{vs[i], vs[i + 1]};
    const Edge backward{vs[i + 1], vs[i]};
    if (in_link && e != backward) {
      problems.push_back("linkage edge not reversed at step " +
                         std::to_string(i));
    } else if (!in_link && e != forward) {
      problems.push_back("non-linkage edge reversed at step " +
                         std::to_string(i));
    }
  }
  std::map<Vertex, int> visits;
  for (Vertex v : vs) ++visits[v];
  for (auto [v, count] : visits) {
    if (count > 1 && !on_link.count(v)) {
      problems.push_back("vertex " + d.name(v) +
                         " repeated but not on the linkage");
    }
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!on_link.count(vs[i])) continue;
    const Edge before = i == 0 ? es[0] : es[i - 1];
    if (!link_edges.count(before) && !link_edges.count(es[i])) {
      problems.push_back("vertex " + d.name(vs[i]) +
                         " on the linkage entered and left off it");
    }
  }
  return problems;
}

namespace detail {

/// Per-vertex view of a linkage: neighbours along its path.
struct LinkageIndex {
  static constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
  std::vector<bool> on;
  std::vector<Vertex> pred;
  std::vector<Vertex> succ;

  LinkageIndex(const Dimaze& d, const Linkage& link)
      : on(d.size(), false), pred(d.size(), kNone), succ(d.size(), kNone) {
    for (const auto& p : link.paths()) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        Vertex v = p.vertices[i];
        on[v] = true;
        if (i > 0) pred[v] = p.vertices[i - 1];
        if (i + 1 < p.size()) succ[v] = p.vertices[i + 1];
      }
    }
  }
};

enum Mode : int { kForward = 0, kBackward = 1 };

struct WalkSearch {
  std::optional<AlternatingWalk> walk;
  std::vector<bool> reached;  // per vertex, in any mode
};

/// Breadth-first search over (vertex, arrival mode) states. Sources and
/// successor states are expanded in identifier order.
inline WalkSearch SearchWalk(const Dimaze& d, const VertexSet& sources,
                             const LinkageIndex& idx) {
  const std::size_t n = d.size();
  struct Step {
    int prev = -1;
    Edge edge{};
  };
  std::vector<Step> parent(2 * n);
  std::vector<bool> seen(2 * n, false);
  std::deque<int> queue;
  WalkSearch out;
  out.reached.assign(n, false);
  auto state = [](Vertex v, Mode m) { return static_cast<int>(2 * v + m); };
  // A source inside a path may only step back along it, taking over the
  // path's tail.
  for (Vertex s : sources) {
    if (idx.on[s] && idx.pred[s] == LinkageIndex::kNone) continue;
    seen[state(s, kForward)] = true;
    queue.push_back(state(s, kForward));
  }
  std::vector<std::pair<Vertex, std::pair<Mode, Edge>>> moves;
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    const Vertex v = static_cast<Vertex>(cur / 2);
    const Mode mode = static_cast<Mode>(cur % 2);
    out.reached[v] = true;
    if (!idx.on[v] && d.is_exit(v)) {
      AlternatingWalk walk;
      for (int s = cur; s != -1; s = parent[s].prev) {
        walk.vertices.push_back(static_cast<Vertex>(s / 2));
        if (parent[s].prev != -1) walk.edges.push_back(parent[s].edge);
      }
      std::reverse(walk.vertices.begin(), walk.vertices.end());
      std::reverse(walk.edges.begin(), walk.edges.end());
      out.walk = std::move(walk);
      return out;
    }
    moves.clear();
    if (!idx.on[v]) {
      for (Vertex w : d.successors(v)) moves.push_back({w, {kForward, {v, w}}});
    } else {
      if (idx.pred[v] != LinkageIndex::kNone) {
        moves.push_back({idx.pred[v], {kBackward, {idx.pred[v], v}}});
      }
      if (mode == kBackward) {
        for (Vertex w : d.successors(v)) {
          if (w != idx.succ[v]) moves.push_back({w, {kForward, {v, w}}});
        }
      }
    }
    std::sort(moves.begin(), moves.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [w, how] : moves) {
      const int next = state(w, how.first);
      if (seen[next]) continue;
      seen[next] = true;
      parent[next] = {cur, how.second};
      queue.push_back(next);
    }
  }
  return out;
}

/// Symmetric difference of the linkage with the walk, read back as paths.
inline Linkage ApplyWalk(const Dimaze& d, const Linkage& link,
                         const AlternatingWalk& walk) {
  std::set<Edge> edges = link.edges();
  for (const Edge& e : walk.edges) {
    if (!edges.erase(e)) edges.insert(e);
  }
  std::vector<Vertex> next(d.size(), LinkageIndex::kNone);
  for (auto [t, h] : edges) {
    if (next[t] != LinkageIndex::kNone) {
      throw InternalError("augmented edge set branches at " + d.name(t));
    }
    next[t] = h;
  }
  VertexSet starts = link.ini();
  starts.insert(walk.vertices.front());
  std::vector<DirectedPath> paths;
  for (Vertex s : starts) {
    std::vector<Vertex> vs{s};
    while (next[vs.back()] != LinkageIndex::kNone && vs.size() <= d.size()) {
      vs.push_back(next[vs.back()]);
    }
    paths.emplace_back(std::move(vs));
  }
  Linkage out(std::move(paths));
  if (auto problems = linkage_problems(d, out); !problems.empty()) {
    throw InternalError("augmentation produced a non-linkage: " +
                        problems.front());
  }
  return out;
}

inline void RequireLinkageFrom(const Dimaze& d, const Linkage& link,
                               const VertexSet& x) {
  if (auto problems = linkage_problems(d, link); !problems.empty()) {
    throw ContractViolation("not a linkage: " + problems.front());
  }
  if (!is_subset(link.ini(), x)) {
    throw ContractViolation("linkage does not start inside X");
  }
}

}  // namespace detail

/// One augmentation round: a linkage with one more path when an alternating
/// walk from X reaches a free exit, else a separator on `link`.
inline AugmentResult augment(const Dimaze& d, const VertexSet& x,
                             const Linkage& link) {
  require_valid(d);
  detail::RequireLinkageFrom(d, link, x);
  const detail::LinkageIndex idx(d, link);
  auto search = detail::SearchWalk(d, x, idx);
  if (search.walk) {
    Linkage bigger = detail::ApplyWalk(d, link, *search.walk);
    return AugmentedLinkage{std::move(bigger), std::move(*search.walk)};
  }
  // Last reached vertex on each path; the initial vertex if none is reached.
  SeparatorOnLinkage sep{{}, link};
  for (const auto& p : link.paths()) {
    Vertex chosen = p.front();
    for (Vertex v : p.vertices) {
      if (search.reached[v]) chosen = v;
    }
    sep.separator.insert(chosen);
  }
  return sep;
}

struct MaxLinkage {
  Linkage linkage;
  VertexSet separator;
  int rounds = 0;
};

/// Maximum linkage from a subset of X together with an X--B0 separator on
/// it (finite Menger), by repeated augmentation from `start`.
inline MaxLinkage max_linkage(const Dimaze& d, const VertexSet& x,
                              Linkage start = {}) {
  MaxLinkage out{std::move(start), {}, 0};
  while (true) {
    auto r = augment(d, x, out.linkage);
    if (auto* sep = std::get_if<SeparatorOnLinkage>(&r)) {
      out.separator = std::move(sep->separator);
      return out;
    }
    out.linkage = std::move(std::get<AugmentedLinkage>(r).linkage);
    ++out.rounds;
  }
}

struct Independence {
  bool independent = false;
  Linkage witness;  // from exactly I when independent
};

inline Independence is_independent(const Dimaze& d, const VertexSet& set) {
  for (Vertex v : set) {
    if (v >= d.size()) throw ContractViolation("vertex out of range");
  }
  auto m = max_linkage(d, set);
  const bool ok = m.linkage.size() == set.size();
  return {ok, ok ? std::move(m.linkage) : Linkage{}};
}

inline std::size_t rank_of(const Dimaze& d, const VertexSet& set) {
  return max_linkage(d, set).linkage.size();
}

struct OntoExtension {
  bool complete = false;
  Linkage linkage;
  VertexSet unreachable;  // exits still uncovered when !complete
};

/// Extends `link` to a linkage onto all exits keeping its initial vertices.
inline OntoExtension extend_onto(const Dimaze& d, const Linkage& link) {
  require_valid(d);
  const VertexSet x = set_union(link.ini(), d.exits());
  auto m = max_linkage(d, x, link);
  OntoExtension out;
  out.unreachable = set_minus(d.exits(), m.linkage.ter());
  out.complete = out.unreachable.empty();
  out.linkage = std::move(m.linkage);
  return out;
}

/// Outcome of the exchange step behind (I3).
struct BaseAugmentation {
  enum class Kind {
    kExtended,        // x in B\I with I+x independent
    kMaximal,         // I is linkable onto the exits, nothing to add
    kBaseNotMaximal,  // no walk: relinking shows B + missed_exit independent
  };
  Kind kind = Kind::kMaximal;
  Vertex x = 0;
  Linkage witness;          // kExtended: linkage from I+x
  AlternatingWalk walk;     // kExtended
  VertexSet separator;      // kBaseNotMaximal
  Linkage relinked;         // kBaseNotMaximal: {Q_v s_v P_v : v in B}
  Vertex missed_exit = 0;   // kBaseNotMaximal
};

/// For independent I and maximal B, finds x in B\I with I+x independent.
inline BaseAugmentation augment_toward_base(const Dimaze& d,
                                            const VertexSet& i_set,
                                            const VertexSet& b_set) {
  require_valid(d);
  auto red = is_independent(d, i_set);
  auto blue = is_independent(d, b_set);
  if (!red.independent || !blue.independent) {
    throw ContractViolation("augment_toward_base needs independent I and B");
  }
  BaseAugmentation out;
  const Linkage& p = red.witness;
  const VertexSet missed = set_minus(d.exits(), p.ter());
  if (missed.empty()) return out;
  const VertexSet x = set_union(b_set, i_set);
  auto r = augment(d, x, p);
  if (auto* aug = std::get_if<AugmentedLinkage>(&r)) {
    out.kind = BaseAugmentation::Kind::kExtended;
    out.x = aug->walk.vertices.front();
    out.witness = std::move(aug->linkage);
    out.walk = std::move(aug->walk);
    return out;
  }
  out.kind = BaseAugmentation::Kind::kBaseNotMaximal;
  out.separator = std::get<SeparatorOnLinkage>(r).separator;
  out.missed_exit = *missed.begin();
  std::vector<DirectedPath> relinked;
  for (const auto& q : blue.witness.paths()) {
    auto s = std::find_if(q.vertices.begin(), q.vertices.end(),
                          [&](Vertex v) { return out.separator.count(v); });
    if (s == q.vertices.end()) {
      throw InternalError("blue path avoids the separator");
    }
    const DirectedPath* pv = p.through(*s);
    relinked.push_back(DirectedPath::Join(q, *s, *pv));
  }
  out.relinked = Linkage(std::move(relinked));
  if (!is_linkage(d, out.relinked) ||
      out.relinked.vertices().count(out.missed_exit)) {
    throw InternalError("relinked base paths do not form a linkage");
  }
  return out;
}

}  // namespace gammoid

#endif  // GAMMOID_LINKAGE_ENGINE_HPP_
