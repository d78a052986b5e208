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

#include "gtest/gtest.h"
#include "gammoid/gammoid.hpp"
#include "oracles.hpp"

namespace gammoid {
namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;

BipartiteGraph RandomBigraph(std::mt19937_64& rng, std::size_t nl,
                             std::size_t nr, double p) {
  std::vector<std::string> left, right;
  for (std::size_t i = 0; i < nl; ++i) left.push_back("l" + std::to_string(i));
  for (std::size_t i = 0; i < nr; ++i) right.push_back("r" + std::to_string(i));
  std::bernoulli_distribution edge(p);
  Edges edges;
  for (const auto& a : left) {
    for (const auto& b : right) {
      if (edge(rng)) edges.emplace_back(a, b);
    }
  }
  return BipartiteGraph(left, right, edges);
}

void ExpectGoodExtension(const BipartiteGraph& g, const VertexSet& i_set,
                         const TreeExtension& ext) {
  EXPECT_TRUE(ext.violations.empty())
      << (ext.violations.empty() ? "" : ext.violations.front());
  EXPECT_TRUE(is_subset(i_set, ext.base));
  EXPECT_TRUE(mt_is_maximal(g, ext.base));
  EXPECT_TRUE(is_matching(g, ext.matching));
  EXPECT_EQ(matched_left(ext.matching), ext.base);
}

TEST(BigraphTest, ParseSerializeRoundTrip) {
  const std::string text =
      "bigraph v1\nleft a\nleft b\nright w\nroot w\nedge a w\nedge b w\n";
  const auto g = parse_bigraph(text);
  EXPECT_EQ(serialize(g), text);
  EXPECT_EQ(g.left_size(), 2u);
  EXPECT_EQ(to_json(g)["root"], "w");
  EXPECT_NE(to_dot(g).find("\"a\" -- \"w\""), std::string::npos);
  EXPECT_THROW(parse_bigraph("bigraph v1\nleft a\nedge a w\n"), ReferenceError);
  EXPECT_THROW(parse_bigraph("bigraph v1\nleft a\nright a\n"),
               ContractViolation);
  EXPECT_THROW(parse_bigraph("bigraph v1\nleft\n"), ParseError);
}

TEST(MatchingTest, Examples) {
  const BipartiteGraph g({"a", "b", "c"}, {"w1", "w2"},
                         {{"a", "w1"}, {"b", "w1"}, {"c", "w2"}});
  EXPECT_TRUE(mt_is_independent(g, g.left_ids({"a", "c"})).independent);
  EXPECT_FALSE(mt_is_independent(g, g.left_ids({"a", "b"})).independent);
  EXPECT_TRUE(mt_is_maximal(g, g.left_ids({"b", "c"})));
  EXPECT_FALSE(mt_is_maximal(g, g.left_ids({"c"})));
}

TEST(MatchingTest, AgreesWithEnumerationOfMatchings) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto g = RandomBigraph(rng, 1 + i % 5, 1 + (i / 5) % 5, 0.4);
    const auto table = oracle::MatchableTable(g);
    for (Mask m = 0; m < table.size(); ++m) {
      auto r = mt_is_independent(g, mask_to_set(m));
      ASSERT_EQ(r.independent, table[m]);
      if (r.independent) {
        EXPECT_TRUE(is_matching(g, r.witness));
        EXPECT_EQ(matched_left(r.witness), mask_to_set(m));
      }
    }
  }
}

TEST(MtAugmentTest, DirectExtension) {
  const BipartiteGraph g({"a", "b"}, {"w1", "w2"}, {{"a", "w1"}, {"b", "w2"}});
  auto r = mt_augment(g, g.left_ids({"a"}), g.left_ids({"a", "b"}));
  EXPECT_EQ(g.left_name(r.y), "b");
  EXPECT_EQ(r.path.size(), 1u);
}

TEST(MtAugmentTest, AlternatingPathThroughOutsideElement) {
  const BipartiteGraph g(
      {"a", "b", "c", "d"}, {"w1", "w2"},
      {{"a", "w1"}, {"b", "w1"}, {"c", "w1"}, {"c", "w2"}, {"d", "w2"}});
  const VertexSet i_set = g.left_ids({"b"});
  auto r = mt_augment(g, i_set, g.left_ids({"a", "c"}));
  EXPECT_EQ(g.left_name(r.y), "c");
  EXPECT_EQ(g.left_name(r.x), "d");
  EXPECT_TRUE(is_matching(g, r.matching));
  EXPECT_EQ(matched_left(r.matching), with(i_set, r.y));
}

TEST(MtAugmentTest, Preconditions) {
  const BipartiteGraph g({"a", "b"}, {"w"}, {{"a", "w"}, {"b", "w"}});
  EXPECT_THROW(mt_augment(g, g.left_ids({"a", "b"}), g.left_ids({"a"})),
               ContractViolation);
  EXPECT_THROW(mt_augment(g, {}, {}), ContractViolation);
  EXPECT_THROW(mt_augment(g, g.left_ids({"a"}), g.left_ids({"b"})),
               ContractViolation);
}

TEST(MtAugmentTest, RandomInstances) {
  std::mt19937_64 rng(42);
  int checked = 0;
  for (int i = 0; i < 2000 && checked < 300; ++i) {
    const auto g = RandomBigraph(rng, 2 + i % 6, 1 + i % 4, 0.45);
    const VertexSet i_set = oracle::RandomSubset(rng, g.left_size(), 0.3);
    if (!mt_is_independent(g, i_set).independent || mt_is_maximal(g, i_set)) {
      continue;
    }
    std::vector<Vertex> order(g.left_size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    VertexSet b;
    for (Vertex v : order) {
      if (mt_is_independent(g, with(b, v)).independent) b.insert(v);
    }
    auto r = mt_augment(g, i_set, b);
    EXPECT_TRUE(b.count(r.y));
    EXPECT_FALSE(i_set.count(r.y));
    EXPECT_TRUE(is_matching(g, r.matching));
    EXPECT_EQ(matched_left(r.matching), with(i_set, r.y));
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(TreeTest, PathOfLength2) {
  const BipartiteGraph g({"v1"}, {"w1", "w2"}, {{"v1", "w1"}, {"v1", "w2"}},
                         "w1");
  auto ext = tree_maximal_extension(g, {});
  EXPECT_EQ(g.left_names(ext.base), std::vector<std::string>{"v1"});
  ExpectGoodExtension(g, {}, ext);
}

TEST(TreeTest, StarHasRankOne) {
  const BipartiteGraph g({"a", "b", "c"}, {"w"},
                         {{"a", "w"}, {"b", "w"}, {"c", "w"}}, "w");
  for (Vertex v = 0; v < 3; ++v) {
    auto ext = tree_maximal_extension(g, {v});
    EXPECT_EQ(ext.base, VertexSet{v});
    ExpectGoodExtension(g, {v}, ext);
  }
  auto empty = tree_maximal_extension(g, {});
  EXPECT_EQ(empty.base.size(), 1u);
}

TEST(TreeTest, ModeErrors) {
  const BipartiteGraph no_root({"a"}, {"w"}, {{"a", "w"}});
  EXPECT_THROW(tree_maximal_extension(no_root, {}), ModeError);
  const BipartiteGraph cycle({"a", "b"}, {"w1", "w2"},
                             {{"a", "w1"}, {"a", "w2"}, {"b", "w1"}, {"b", "w2"}},
                             "w1");
  EXPECT_THROW(tree_maximal_extension(cycle, {}), ModeError);
  const BipartiteGraph forest({"a", "b"}, {"w1", "w2", "w3"},
                              {{"a", "w1"}, {"b", "w2"}}, "w1");
  EXPECT_THROW(tree_maximal_extension(forest, {}), ModeError);
  EXPECT_THROW(tree_maximal_extension(
                   BipartiteGraph({"a", "b"}, {"w"}, {{"a", "w"}, {"b", "w"}}, "w"),
                   VertexSet{0, 1}),
               ContractViolation);
}

TEST(TreeTest, RootedTreeCountsMatchKnownSequence) {
  const std::vector<std::size_t> expected{1,  1,   2,   4,    9,    20,
                                          48, 115, 286, 719, 1842, 4766};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    std::size_t count = 0;
    oracle::ForEachRootedTree(n, [&](const std::vector<int>&) { ++count; });
    EXPECT_EQ(count, expected[n - 1]) << "n=" << n;
  }
}

TEST(TreeTest, EverySubsetOfSmallTrees) {
  for (std::size_t n = 2; n <= 8; ++n) {
    oracle::ForEachRootedTree(n, [&](const std::vector<int>& levels) {
      const auto g = oracle::TreeFromLevels(levels);
      const auto table = oracle::MatchableTable(g);
      for (Mask m = 0; m < table.size(); ++m) {
        if (!table[m]) continue;
        const VertexSet i_set = mask_to_set(m);
        auto ext = tree_maximal_extension(g, i_set);
        ExpectGoodExtension(g, i_set, ext);
        const RootedTree t = root_tree(g);
        for (const auto& st : ext.stages) {
          EXPECT_TRUE(stage_path_problems(g, t, i_set, st).empty());
        }
      }
    });
  }
}

TEST(ConversionTest, BranchingTreeMatchesLinkability) {
  for (int depth = 1; depth <= 3; ++depth) {
    const Dimaze d = generate({Family::kBranchingTree, depth, 2, 2});
    const auto g = dimaze_tree_to_bipartite(d);
    EXPECT_EQ(g.right_size(), d.exits().size());
    EXPECT_EQ(g.left_size(), d.size());
    EXPECT_EQ(g.right_name(*g.root()), "t");
    auto to_left = [&](Vertex v) {
      return g.left_at(d.is_exit(v) ? d.name(v) + "'" : d.name(v));
    };
    for (Mask m = 0; m < (Mask{1} << d.size()); ++m) {
      VertexSet s, image;
      for (Vertex v : mask_to_set(m)) {
        s.insert(v);
        image.insert(to_left(v));
      }
      ASSERT_EQ(is_independent(d, s).independent,
                mt_is_independent(g, image).independent);
    }
  }
}

TEST(ConversionTest, Rejections) {
  EXPECT_THROW(dimaze_tree_to_bipartite(Dimaze(
                   {"x1", "x2", "y0", "y1"},
                   {{"x1", "y0"}, {"x1", "y1"}, {"x2", "y0"}, {"x2", "y1"}},
                   {"y0", "y1"})),
               ModeError);
  EXPECT_NO_THROW(dimaze_tree_to_bipartite(generate({Family::kAltComb, 2})));
  EXPECT_THROW(dimaze_tree_to_bipartite(generate({Family::kPath, 3})),
               ModeError);
  EXPECT_THROW(
      dimaze_tree_to_bipartite(Dimaze({"a"}, {}, {})), ModeError);
  EXPECT_THROW(dimaze_tree_to_bipartite(
                   Dimaze({"b", "b'"}, {{"b'", "b"}}, {"b"})),
               ModeError);
  const auto g = dimaze_tree_to_bipartite(generate({Family::kStar, 2}));
  EXPECT_EQ(g.left_names(), (std::vector<std::string>{"c", "e1'", "e2'"}));
  EXPECT_EQ(g.right_name(*g.root()), "e1");
}

}  // namespace
}  // namespace gammoid
