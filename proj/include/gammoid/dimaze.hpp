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

// Dimazes (digraphs with a set of out-degree-0 exits), directed paths and
// linkages.
//
// Vertices are stored by index into the lexicographically sorted list of
// identifiers, so comparing two `Vertex` values compares their identifiers.
// Every tie-break in the library relies on that.

#ifndef GAMMOID_DIMAZE_HPP_
#define GAMMOID_DIMAZE_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammoid/error.hpp"

namespace gammoid {

using Vertex = std::uint32_t;
using VertexSet = std::set<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

class Dimaze {
 public:
  Dimaze() = default;

  /// Builds a dimaze from identifiers. Duplicate vertex declarations
  /// collapse; edges and exits naming undeclared vertices throw
  /// ReferenceError. Duplicate edges and self-loops are kept so that
  /// `validate` can report them.
  Dimaze(std::vector<std::string> vertices,
         const std::vector<std::pair<std::string, std::string>>& edges,
         const std::vector<std::string>& exits) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()),
                   vertices.end());
    names_ = std::move(vertices);
    for (const auto& [tail, head] : edges) {
      raw_edges_.emplace_back(at(tail), at(head));
    }
    for (const auto& e : exits) exits_.insert(at(e));
    Index();
  }

  /// Same as above with vertex indices referring to the sorted `names`.
  static Dimaze FromIndices(std::vector<std::string> sorted_names,
                            std::vector<Edge> edges, VertexSet exits) {
    Dimaze d;
    d.names_ = std::move(sorted_names);
    d.raw_edges_ = std::move(edges);
    d.exits_ = std::move(exits);
    d.Index();
    return d;
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Vertex> find(std::string_view id) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), id);
    if (it == names_.end() || *it != id) return std::nullopt;
    return static_cast<Vertex>(it - names_.begin());
  }

  Vertex at(std::string_view id) const {
    auto v = find(id);
    if (!v) throw ReferenceError("unknown vertex " + std::string(id));
    return *v;
  }

  /// Out-neighbours in identifier order, without duplicates or self-loops.
  const std::vector<Vertex>& successors(Vertex v) const { return out_[v]; }
  const std::vector<Vertex>& predecessors(Vertex v) const { return in_[v]; }

  bool has_edge(Vertex tail, Vertex head) const {
    const auto& s = out_[tail];
    return std::binary_search(s.begin(), s.end(), head);
  }

  bool is_exit(Vertex v) const { return exits_.count(v) != 0; }
  const VertexSet& exits() const { return exits_; }

  /// Edges as declared (sorted; may contain duplicates or loops).
  const std::vector<Edge>& edges() const { return raw_edges_; }

  /// True when `validate` would report nothing.
  bool valid() const { return valid_; }

  VertexSet ids(const std::vector<std::string>& ids) const {
    VertexSet out;
    for (const auto& id : ids) out.insert(at(id));
    return out;
  }

  std::vector<std::string> names(const VertexSet& set) const {
    std::vector<std::string> out;
    out.reserve(set.size());
    for (Vertex v : set) out.push_back(names_[v]);
    return out;
  }

  VertexSet all_vertices() const {
    VertexSet out;
    for (Vertex v = 0; v < size(); ++v) out.insert(out.end(), v);
    return out;
  }

  friend bool operator==(const Dimaze& a, const Dimaze& b) {
    return a.names_ == b.names_ && a.raw_edges_ == b.raw_edges_ &&
           a.exits_ == b.exits_;
  }

 private:
  void Index() {
    std::sort(raw_edges_.begin(), raw_edges_.end());
    out_.assign(names_.size(), {});
    in_.assign(names_.size(), {});
    valid_ = true;
    for (std::size_t i = 0; i < raw_edges_.size(); ++i) {
      auto [t, h] = raw_edges_[i];
      if (t == h || (i > 0 && raw_edges_[i - 1] == raw_edges_[i])) {
        valid_ = false;
        continue;
      }
      out_[t].push_back(h);
      in_[h].push_back(t);
    }
    for (auto& list : in_) std::sort(list.begin(), list.end());
    for (Vertex e : exits_) {
      if (!out_[e].empty()) valid_ = false;
    }
  }

  std::vector<std::string> names_;
  std::vector<Edge> raw_edges_;
  VertexSet exits_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  bool valid_ = true;
};

/// Every invariant violation of `d`, in a stable order; empty means valid.
inline std::vector<std::string> validate(const Dimaze& d) {
  std::vector<std::string> problems;
  const auto& edges = d.edges();
  std::vector<std::size_t> out_degree(d.size(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [t, h] = edges[i];
    if (t == h) {
      problems.push_back("self-loop at " + d.name(t));
    } else if (i > 0 && edges[i - 1] == edges[i]) {
      problems.push_back("duplicate edge " + d.name(t) + " -> " + d.name(h));
    }
    if (i == 0 || edges[i - 1] != edges[i]) ++out_degree[t];
  }
  for (Vertex e : d.exits()) {
    if (out_degree[e] != 0) {
      problems.push_back("exit " + d.name(e) + " has out-degree " +
                         std::to_string(out_degree[e]));
    }
  }
  return problems;
}

inline void require_valid(const Dimaze& d) {
  if (!d.valid()) {
    throw ContractViolation("dimaze is invalid: " + validate(d).front());
  }
}

/// A nonempty sequence of distinct vertices; a single vertex is the trivial
/// path.
struct DirectedPath {
  std::vector<Vertex> vertices;

  DirectedPath() = default;
  explicit DirectedPath(std::vector<Vertex> vs) : vertices(std::move(vs)) {}
  static DirectedPath Trivial(Vertex v) { return DirectedPath({v}); }

  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  std::size_t size() const { return vertices.size(); }
  bool trivial() const { return vertices.size() == 1; }

  std::optional<std::size_t> index_of(Vertex v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    if (it == vertices.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
  }
  bool contains(Vertex v) const { return index_of(v).has_value(); }

  /// Pw: from the initial vertex up to and including w.
  DirectedPath up_to(Vertex w) const {
    auto i = Index(w);
    return DirectedPath({vertices.begin(), vertices.begin() + i + 1});
  }
  /// wP: from w to the terminal vertex.
  DirectedPath from(Vertex w) const {
    auto i = Index(w);
    return DirectedPath({vertices.begin() + i, vertices.end()});
  }
  /// Vertices of Pw with w excluded (possibly empty).
  std::vector<Vertex> before(Vertex w) const {
    auto i = Index(w);
    return {vertices.begin(), vertices.begin() + i};
  }
  /// Vertices of wP with w excluded (possibly empty).
  std::vector<Vertex> after(Vertex w) const {
    auto i = Index(w);
    return {vertices.begin() + i + 1, vertices.end()};
  }

  /// PwQ: Pw followed by the part of Q after w.
  static DirectedPath Join(const DirectedPath& p, Vertex w,
                           const DirectedPath& q) {
    DirectedPath out = p.up_to(w);
    auto tail = q.after(w);
    out.vertices.insert(out.vertices.end(), tail.begin(), tail.end());
    return out;
  }

  friend auto operator<=>(const DirectedPath&, const DirectedPath&) = default;

 private:
  std::size_t Index(Vertex w) const {
    auto i = index_of(w);
    if (!i) throw ContractViolation("vertex is not on the path");
    return *i;
  }
};

/// A set of paths, kept sorted by initial vertex. Disjointness and exit
/// termination are checked by `linkage_problems`, not enforced here.
class Linkage {
 public:
  Linkage() = default;
  explicit Linkage(std::vector<DirectedPath> paths) : paths_(std::move(paths)) {
    std::sort(paths_.begin(), paths_.end());
  }

  const std::vector<DirectedPath>& paths() const { return paths_; }
  std::size_t size() const { return paths_.size(); }
  bool empty() const { return paths_.empty(); }

  VertexSet ini() const {
    VertexSet out;
    for (const auto& p : paths_) out.insert(p.front());
    return out;
  }
  VertexSet ter() const {
    VertexSet out;
    for (const auto& p : paths_) out.insert(p.back());
    return out;
  }
  VertexSet vertices() const {
    VertexSet out;
    for (const auto& p : paths_) out.insert(p.vertices.begin(), p.vertices.end());
    return out;
  }
  std::set<Edge> edges() const {
    std::set<Edge> out;
    for (const auto& p : paths_) {
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        out.emplace(p.vertices[i], p.vertices[i + 1]);
      }
    }
    return out;
  }

  /// The path starting at `x`, if any.
  const DirectedPath* starting_at(Vertex x) const {
    for (const auto& p : paths_) {
      if (p.front() == x) return &p;
    }
    return nullptr;
  }
  /// The path ending at `y`, if any.
  const DirectedPath* ending_at(Vertex y) const {
    for (const auto& p : paths_) {
      if (p.back() == y) return &p;
    }
    return nullptr;
  }
  /// The path through `v`, if any.
  const DirectedPath* through(Vertex v) const {
    for (const auto& p : paths_) {
      if (p.contains(v)) return &p;
    }
    return nullptr;
  }

  /// Paths whose initial vertex is in `keep`.
  Linkage restricted_to(const VertexSet& keep) const {
    std::vector<DirectedPath> out;
    for (const auto& p : paths_) {
      if (keep.count(p.front())) out.push_back(p);
    }
    return Linkage(std::move(out));
  }

  friend bool operator==(const Linkage&, const Linkage&) = default;

 private:
  std::vector<DirectedPath> paths_;
};

/// Reasons `link` is not a linkage of `d`; empty when it is one.
inline std::vector<std::string> linkage_problems(const Dimaze& d,
                                                 const Linkage& link) {
  std::vector<std::string> problems;
  std::map<Vertex, std::size_t> owner;
  for (std::size_t i = 0; i < link.size(); ++i) {
    const auto& p = link.paths()[i];
    if (p.vertices.empty()) {
      problems.push_back("empty path");
      continue;
    }
    for (std::size_t j = 0; j < p.size(); ++j) {
      Vertex v = p.vertices[j];
      if (v >= d.size()) {
        problems.push_back("vertex index out of range");
        return problems;
      }
      if (j + 1 < p.size() && !d.has_edge(v, p.vertices[j + 1])) {
        problems.push_back("missing edge " + d.name(v) + " -> " +
                           d.name(p.vertices[j + 1]));
      }
      auto [it, fresh] = owner.emplace(v, i);
      if (!fresh) {
        problems.push_back(it->second == i
                               ? "path repeats vertex " + d.name(v)
                               : "paths share vertex " + d.name(v));
      }
    }
    if (!d.is_exit(p.back())) {
      problems.push_back("path ends at non-exit " + d.name(p.back()));
    }
  }
  return problems;
}

inline bool is_linkage(const Dimaze& d, const Linkage& link) {
  return linkage_problems(d, link).empty();
}

// Small set helpers used throughout.

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline VertexSet with(VertexSet s, Vertex v) {
  s.insert(v);
  return s;
}

inline VertexSet without(VertexSet s, Vertex v) {
  s.erase(v);
  return s;
}

}  // namespace gammoid

#endif  // GAMMOID_DIMAZE_HPP_
