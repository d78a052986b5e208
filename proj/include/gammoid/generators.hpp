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

// Finite truncations of the standard infinite dimaze families.
//
// Each family is parameterized by a truncation depth; the depth-k dimaze is
// an induced sub-dimaze of the depth-(k+1) one and vertex names are stable
// across depths.
//
//   star(n)               c -> e1..en
//   path(k)               pk -> ... -> p1 -> p0, exit p0
//   half_grid(k)          (x,y), 0 <= x <= y <= k, y > 0; up/left edges,
//                         exits (0,y)
//   alt_comb(k)           xi -> y(i-1), xi -> yi; exits y0..yk
//   incoming_comb(k)      r(i+1) -> ri, ri -> ei, r1 -> e0; exits e0..ek
//   turbine(n,k)          n combs rc.0 -> ... -> rc.k with teeth rc.i -> ei
//                         sharing the exits e0..ek
//   branching_tree(b,d)   b-ary tree of depth d rooted at t; even levels
//                         are exits, edges point at them

#ifndef GAMMOID_GENERATORS_HPP_
#define GAMMOID_GENERATORS_HPP_

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammoid/dimaze.hpp"

namespace gammoid {

enum class Family {
  kStar,
  kPath,
  kHalfGrid,
  kAltComb,
  kIncomingComb,
  kTurbine,
  kBranchingTree,
};

inline constexpr std::array<std::pair<Family, std::string_view>, 7>
    kFamilyNames = {{{Family::kStar, "star"},
                     {Family::kPath, "path"},
                     {Family::kHalfGrid, "half_grid"},
                     {Family::kAltComb, "alt_comb"},
                     {Family::kIncomingComb, "incoming_comb"},
                     {Family::kTurbine, "turbine"},
                     {Family::kBranchingTree, "branching_tree"}}};

inline std::string_view family_name(Family f) {
  for (auto [family, name] : kFamilyNames) {
    if (family == f) return name;
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (auto [family, n] : kFamilyNames) {
    if (n == name) return family;
  }
  throw ParameterError("unknown family " + std::string(name));
}

/// A family plus its parameters. `depth` is the truncation depth k (the
/// leaf count for star); `copies` is used by turbine and `branching` by
/// branching_tree.
struct FamilyGenerator {
  Family family = Family::kStar;
  int depth = 1;
  int copies = 2;
  int branching = 2;

  FamilyGenerator with_depth(int k) const {
    FamilyGenerator g = *this;
    g.depth = k;
    return g;
  }

  std::string describe() const {
    std::string out(family_name(family));
    switch (family) {
      case Family::kTurbine:
        return out + "(n=" + std::to_string(copies) +
               ",k=" + std::to_string(depth) + ")";
      case Family::kBranchingTree:
        return out + "(b=" + std::to_string(branching) +
               ",depth=" + std::to_string(depth) + ")";
      default:
        return out + "(" + std::to_string(depth) + ")";
    }
  }
};

namespace detail {

struct Builder {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> exits;

  void vertex(std::string v) { vertices.push_back(std::move(v)); }
  void exit(std::string v) {
    vertices.push_back(v);
    exits.push_back(std::move(v));
  }
  void edge(std::string t, std::string h) {
    edges.emplace_back(std::move(t), std::move(h));
  }
  Dimaze build() { return Dimaze(std::move(vertices), edges, exits); }
};

inline std::string GridName(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

inline void TreeLevel(Builder& b, const std::string& node, int level,
                      int depth, int branching) {
  if (level % 2 == 0) {
    b.exit(node);
  } else {
    b.vertex(node);
  }
  if (level == depth) return;
  for (int j = 1; j <= branching; ++j) {
    std::string child = node + "." + std::to_string(j);
    // Edges point from the odd-level endpoint to the even-level one.
    if (level % 2 == 0) {
      b.edge(child, node);
    } else {
      b.edge(node, child);
    }
    TreeLevel(b, child, level + 1, depth, branching);
  }
}

}  // namespace detail

inline Dimaze generate(const FamilyGenerator& g) {
  const int k = g.depth;
  if (k < 1) {
    throw ParameterError("depth must be >= 1, got " + std::to_string(k));
  }
  detail::Builder b;
  auto s = [](int i) { return std::to_string(i); };
  switch (g.family) {
    case Family::kStar:
      b.vertex("c");
      for (int i = 1; i <= k; ++i) {
        b.exit("e" + s(i));
        b.edge("c", "e" + s(i));
      }
      break;
    case Family::kPath:
      b.exit("p0");
      for (int i = 1; i <= k; ++i) {
        b.vertex("p" + s(i));
        b.edge("p" + s(i), "p" + s(i - 1));
      }
      break;
    case Family::kHalfGrid:
      for (int y = 1; y <= k; ++y) {
        for (int x = 0; x <= y; ++x) {
          if (x == 0) {
            b.exit(detail::GridName(x, y));
            continue;
          }
          b.vertex(detail::GridName(x, y));
          b.edge(detail::GridName(x, y), detail::GridName(x - 1, y));
          if (y < k) b.edge(detail::GridName(x, y), detail::GridName(x, y + 1));
        }
      }
      break;
    case Family::kAltComb:
      b.exit("y0");
      for (int i = 1; i <= k; ++i) {
        b.vertex("x" + s(i));
        b.exit("y" + s(i));
        b.edge("x" + s(i), "y" + s(i - 1));
        b.edge("x" + s(i), "y" + s(i));
      }
      break;
    case Family::kIncomingComb:
      b.exit("e0");
      b.edge("r1", "e0");
      for (int i = 1; i <= k; ++i) {
        b.vertex("r" + s(i));
        b.exit("e" + s(i));
        b.edge("r" + s(i), "e" + s(i));
        if (i > 1) b.edge("r" + s(i), "r" + s(i - 1));
      }
      break;
    case Family::kTurbine:
      if (g.copies < 2) {
        throw ParameterError("turbine needs n >= 2, got " + s(g.copies));
      }
      for (int i = 0; i <= k; ++i) b.exit("e" + s(i));
      for (int c = 1; c <= g.copies; ++c) {
        for (int i = 0; i <= k; ++i) {
          std::string r = "r" + s(c) + "." + s(i);
          b.vertex(r);
          b.edge(r, "e" + s(i));
          if (i < k) b.edge(r, "r" + s(c) + "." + s(i + 1));
        }
      }
      break;
    case Family::kBranchingTree:
      if (g.branching < 1) {
        throw ParameterError("branching_tree needs b >= 1, got " +
                             s(g.branching));
      }
      detail::TreeLevel(b, "t", 0, k, g.branching);
      break;
  }
  return b.build();
}

}  // namespace gammoid

#endif  // GAMMOID_GENERATORS_HPP_
