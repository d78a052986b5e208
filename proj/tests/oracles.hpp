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

// Brute-force reference oracles and instance generators for the tests.
// Nothing here shares code with the algorithms under test beyond the data
// types.

#ifndef GAMMOID_TESTS_ORACLES_HPP_
#define GAMMOID_TESTS_ORACLES_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gammoid/gammoid.hpp"

namespace gammoid::oracle {

/// Every directed path of `d` (as vertex lists) that ends in an exit,
/// grouped by initial vertex.
inline std::vector<std::vector<std::vector<Vertex>>> PathsToExits(
    const Dimaze& d) {
  std::vector<std::vector<std::vector<Vertex>>> out(d.size());
  std::vector<Vertex> cur;
  std::vector<bool> on(d.size(), false);
  std::function<void(Vertex)> dfs = [&](Vertex v) {
    cur.push_back(v);
    on[v] = true;
    if (d.is_exit(v)) out[cur.front()].push_back(cur);
    for (Vertex w : d.successors(v)) {
      if (!on[w]) dfs(w);
    }
    on[v] = false;
    cur.pop_back();
  };
  for (Vertex v = 0; v < d.size(); ++v) dfs(v);
  return out;
}

/// True iff some set of disjoint exit-ending paths starts exactly at `set`.
inline bool Linkable(const Dimaze& d,
                     const std::vector<std::vector<std::vector<Vertex>>>& paths,
                     const VertexSet& set) {
  std::vector<Vertex> order(set.begin(), set.end());
  std::vector<bool> used(d.size(), false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == order.size()) return true;
    for (const auto& p : paths[order[i]]) {
      bool ok = true;
      for (Vertex v : p) {
        // Later initial vertices must stay free for their own paths.
        if (used[v] || (v != order[i] && set.count(v))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (Vertex v : p) used[v] = true;
      if (go(i + 1)) return true;
      for (Vertex v : p) used[v] = false;
    }
    return false;
  };
  return go(0);
}

inline bool Linkable(const Dimaze& d, const VertexSet& set) {
  return Linkable(d, PathsToExits(d), set);
}

/// Largest number of disjoint paths from X to the exits.
inline std::size_t MaxDisjointPaths(const Dimaze& d, const VertexSet& x) {
  const auto paths = PathsToExits(d);
  std::vector<Vertex> xs(x.begin(), x.end());
  std::size_t best = 0;
  for (Mask m = 0; m < (Mask{1} << xs.size()); ++m) {
    if (static_cast<std::size_t>(popcount(m)) <= best) continue;
    VertexSet s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (m >> i & 1) s.insert(xs[i]);
    }
    if (Linkable(d, paths, s)) best = s.size();
  }
  return best;
}

/// True iff every X--B0 path meets S.
inline bool Separates(const Dimaze& d, const VertexSet& x, const VertexSet& s) {
  for (const auto& group : PathsToExits(d)) {
    for (const auto& p : group) {
      if (!x.count(p.front())) continue;
      if (std::none_of(p.begin(), p.end(),
                       [&](Vertex v) { return s.count(v) != 0; })) {
        return false;
      }
    }
  }
  return true;
}

/// Independence table of the linkability system, by brute force.
inline std::vector<bool> LinkabilityTable(const Dimaze& d) {
  const auto paths = PathsToExits(d);
  std::vector<bool> out(Mask{1} << d.size());
  for (Mask m = 0; m < out.size(); ++m) {
    out[m] = Linkable(d, paths, mask_to_set(m));
  }
  return out;
}

/// Left sets saturated by some matching, by enumerating all matchings.
inline std::vector<bool> MatchableTable(const BipartiteGraph& g) {
  const std::size_t nl = g.left_size();
  std::vector<bool> matched(Mask{1} << nl, false);
  std::vector<bool> used(g.right_size(), false);
  std::function<void(std::size_t, Mask)> go = [&](std::size_t v, Mask m) {
    if (v == nl) {
      matched[m] = true;
      return;
    }
    go(v + 1, m);
    for (Vertex w : g.left_neighbors(static_cast<Vertex>(v))) {
      if (used[w]) continue;
      used[w] = true;
      go(v + 1, m | Mask{1} << v);
      used[w] = false;
    }
  };
  go(0, 0);
  // Downward closure is automatic: skipping a vertex is always allowed.
  return matched;
}

/// A random valid dimaze on `n` vertices named v0..v(n-1).
inline Dimaze RandomDimaze(std::mt19937_64& rng, std::size_t n,
                           double edge_p = 0.35, double exit_p = 0.35) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::sort(names.begin(), names.end());
  std::bernoulli_distribution is_exit(exit_p), has_edge(edge_p);
  VertexSet exits;
  for (Vertex v = 0; v < n; ++v) {
    if (is_exit(rng)) exits.insert(v);
  }
  std::vector<Edge> edges;
  for (Vertex t = 0; t < n; ++t) {
    if (exits.count(t)) continue;
    for (Vertex h = 0; h < n; ++h) {
      if (h != t && has_edge(rng)) edges.emplace_back(t, h);
    }
  }
  return Dimaze::FromIndices(names, edges, exits);
}

/// A random linkage: random walks over unused vertices kept when they
/// reach an exit.
inline Linkage RandomLinkage(std::mt19937_64& rng, const Dimaze& d,
                             int attempts = 6) {
  std::vector<bool> used(d.size(), false);
  std::vector<DirectedPath> paths;
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(d.size() - 1));
  for (int a = 0; a < attempts; ++a) {
    Vertex v = pick(rng);
    if (used[v]) continue;
    std::vector<Vertex> walk{v};
    std::set<Vertex> on{v};
    while (!d.is_exit(walk.back())) {
      std::vector<Vertex> next;
      for (Vertex w : d.successors(walk.back())) {
        if (!used[w] && !on.count(w)) next.push_back(w);
      }
      if (next.empty()) break;
      Vertex w = next[std::uniform_int_distribution<std::size_t>(
          0, next.size() - 1)(rng)];
      walk.push_back(w);
      on.insert(w);
    }
    if (!d.is_exit(walk.back())) continue;
    for (Vertex w : walk) used[w] = true;
    paths.emplace_back(std::move(walk));
  }
  return Linkage(std::move(paths));
}

inline VertexSet RandomSubset(std::mt19937_64& rng, std::size_t n,
                              double p = 0.4) {
  std::bernoulli_distribution in(p);
  VertexSet s;
  for (Vertex v = 0; v < n; ++v) {
    if (in(rng)) s.insert(v);
  }
  return s;
}

/// Every dimaze on n vertices up to isomorphism. Exits are the last k
/// labels and only non-exits have out-edges; a labelled dimaze is kept when
/// its edge mask is least among all relabellings preserving the exit set.
inline void ForEachSmallDimaze(std::size_t n,
                               const std::function<void(const Dimaze&)>& f) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t inner = n - k;
    std::vector<Edge> slots;
    std::map<Edge, std::size_t> slot_of;
    for (Vertex t = 0; t < inner; ++t) {
      for (Vertex h = 0; h < n; ++h) {
        if (h == t) continue;
        slot_of[{t, h}] = slots.size();
        slots.emplace_back(t, h);
      }
    }
    // Slot permutation for every relabelling in S_inner x S_k.
    std::vector<std::vector<std::size_t>> perms;
    std::vector<Vertex> a(inner), b(k);
    std::iota(a.begin(), a.end(), 0);
    do {
      std::iota(b.begin(), b.end(), static_cast<Vertex>(inner));
      do {
        std::vector<Vertex> label(n);
        for (std::size_t i = 0; i < inner; ++i) label[i] = a[i];
        for (std::size_t i = 0; i < k; ++i) label[inner + i] = b[i];
        std::vector<std::size_t> p(slots.size());
        for (std::size_t s = 0; s < slots.size(); ++s) {
          p[s] = slot_of.at({label[slots[s].first], label[slots[s].second]});
        }
        perms.push_back(std::move(p));
      } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));

    VertexSet exits;
    for (Vertex v = static_cast<Vertex>(inner); v < n; ++v) exits.insert(v);
    for (Mask m = 0; m < (Mask{1} << slots.size()); ++m) {
      bool canonical = true;
      for (const auto& p : perms) {
        Mask image = 0;
        for (std::size_t s = 0; s < slots.size(); ++s) {
          if (m >> s & 1) image |= Mask{1} << p[s];
        }
        if (image < m) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;
      std::vector<Edge> edges;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (m >> s & 1) edges.push_back(slots[s]);
      }
      f(Dimaze::FromIndices(names, edges, exits));
    }
  }
}

/// Rooted unlabelled trees on n vertices as level sequences, in the
/// constant-time successor order of Beyer and Hedetniemi.
inline void ForEachRootedTree(std::size_t n,
                              const std::function<void(const std::vector<int>&)>& f) {
  if (n == 0) return;
  std::vector<int> l(n);
  for (std::size_t i = 0; i < n; ++i) l[i] = static_cast<int>(i);
  while (true) {
    f(l);
    // Successor: find the last position p with l[p] > 1.
    int p = static_cast<int>(n) - 1;
    while (p > 0 && l[p] <= 1) --p;
    if (p <= 0) break;
    int q = p - 1;
    while (l[q] != l[p] - 1) --q;
    for (std::size_t i = p; i < n; ++i) l[i] = l[i - (p - q)];
  }
}

/// Bipartite tree from a level sequence: even levels in W (named w<i>),
/// odd levels in V (named v<i>), rooted at node 0.
inline BipartiteGraph TreeFromLevels(const std::vector<int>& levels) {
  std::vector<std::string> left, right;
  std::vector<std::pair<std::string, std::string>> edges;
  auto name = [&](std::size_t i) {
    return (levels[i] % 2 == 0 ? "w" : "v") + std::to_string(i);
  };
  std::vector<std::size_t> last_at(levels.size() + 1, 0);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    (levels[i] % 2 == 0 ? right : left).push_back(name(i));
    if (i > 0) {
      const std::size_t parent = last_at[levels[i] - 1];
      if (levels[i] % 2 == 0) {
        edges.emplace_back(name(parent), name(i));
      } else {
        edges.emplace_back(name(i), name(parent));
      }
    }
    last_at[levels[i]] = i;
  }
  return BipartiteGraph(left, right, edges, name(0));
}

}  // namespace gammoid::oracle

#endif  // GAMMOID_TESTS_ORACLES_HPP_
