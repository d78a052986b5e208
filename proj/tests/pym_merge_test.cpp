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

std::vector<std::string> Names(const Dimaze& d, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  for (Vertex v : vs) out.push_back(d.name(v));
  return out;
}

void ExpectMergePostconditions(const Dimaze& d, const Linkage& red,
                               const Linkage& blue, const MergeResult& r) {
  EXPECT_TRUE(is_linkage(d, r.linkage));
  EXPECT_TRUE(is_subset(red.ini(), r.linkage.ini()));
  EXPECT_TRUE(is_subset(blue.ter(), r.linkage.ter()));
  EXPECT_TRUE(is_subset(r.linkage.ini(), set_union(red.ini(), blue.ini())));
  EXPECT_TRUE(is_subset(r.linkage.ter(), set_union(red.ter(), blue.ter())));
}

TEST(MergeTest, CombRedIntoTrivialBlue) {
  const Dimaze d = generate({Family::kAltComb, 2});
  const Linkage red = parse_linkage(d, "x1>y0;x2>y1");
  const Linkage blue = parse_linkage(d, "y0;y1;y2");
  auto r = merge(d, red, blue, {.record_history = true});
  EXPECT_EQ(format_linkage(d, r.linkage), "x1>y0;x2>y1;y2");
  EXPECT_EQ(r.state.step, 1);
  EXPECT_EQ(format_trace(d, r.state),
            "0 | x1,x2 | x1,x2 | y0=y0,y1=y1,y2=y2\n"
            "1 | x1,x2 | y0,y1 | -\n"
            "2 | - | - | -\n");
  ExpectMergePostconditions(d, red, blue, r);
}

TEST(MergeTest, EmptyRedReturnsBlue) {
  const Dimaze d = generate({Family::kStar, 2});
  const Linkage blue = parse_linkage(d, "c>e1;e2");
  auto r = merge(d, {}, blue);
  EXPECT_EQ(r.linkage, blue);
  EXPECT_EQ(r.state.step, 0);
}

TEST(MergeTest, EmptyBlueReturnsRed) {
  const Dimaze d = generate({Family::kStar, 2});
  const Linkage red = parse_linkage(d, "c>e1");
  EXPECT_EQ(merge(d, red, {}).linkage, red);
}

TEST(MergeTest, RejectsNonLinkages) {
  const Dimaze d = generate({Family::kAltComb, 2});
  EXPECT_THROW(merge(d, parse_linkage(d, "x1>y1;x2>y1"), {}),
               ContractViolation);
  EXPECT_THROW(merge(d, {}, parse_linkage(d, "x1")), ContractViolation);
}

TEST(MergeTest, RandomPostconditionsAndFixedPoint) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    const Dimaze d = oracle::RandomDimaze(rng, 3 + i % 8, 0.4, 0.3);
    const Linkage red = oracle::RandomLinkage(rng, d);
    const Linkage blue = oracle::RandomLinkage(rng, d);
    auto r = merge(d, red, blue, {.record_history = true});
    ExpectMergePostconditions(d, red, blue, r);
    // One more round from the final markers changes nothing.
    auto again = detail::ComputeRound(red, blue, r.state.f, r.linkage);
    EXPECT_EQ(again.f, r.state.f);
    EXPECT_EQ(again.q, r.linkage);
    ASSERT_EQ(r.state.history.size(), static_cast<std::size_t>(r.state.step) + 2);
    // Markers only move forward along their paths.
    for (std::size_t k = 1; k < r.state.history.size(); ++k) {
      for (const auto& p : red.paths()) {
        const Vertex x = p.front();
        EXPECT_LE(*p.index_of(r.state.history[k - 1].f.at(x)),
                  *p.index_of(r.state.history[k].f.at(x)));
      }
    }
  }
}

TEST(ExchangeTest, CombSwapsOutFirstExit) {
  const Dimaze d = generate({Family::kAltComb, 2});
  auto r = exchange(d, d.ids({"x1"}), d.ids({"y0", "y1", "y2"}), d.at("x1"));
  ASSERT_EQ(r.kind, ExchangeResult::Kind::kExchange);
  EXPECT_EQ(d.name(r.u), "y0");
  EXPECT_EQ(format_linkage(d, r.witness), "x1>y0;y1;y2");
}

TEST(ExchangeTest, NoneNeededWhenMergeCoversJPlusV) {
  const Dimaze d = generate({Family::kStar, 2});
  auto r = exchange(d, d.ids({"c"}), d.ids({"e2"}), d.at("c"));
  EXPECT_EQ(r.kind, ExchangeResult::Kind::kNoneNeeded);
  EXPECT_EQ(r.witness.ini(), d.ids({"c", "e2"}));
}

TEST(ExchangeTest, ExchangeMayBeReportedWhenJPlusVIsIndependent) {
  // The merge keeps c on e1, so e1 is exchanged even though {c, e1} is
  // independent via c -> e2.
  const Dimaze d = generate({Family::kStar, 2});
  auto r = exchange(d, d.ids({"c"}), d.ids({"e1"}), d.at("c"));
  ASSERT_EQ(r.kind, ExchangeResult::Kind::kExchange);
  EXPECT_EQ(d.name(r.u), "e1");
  EXPECT_EQ(format_linkage(d, r.witness), "c>e1");
}

TEST(ExchangeTest, Preconditions) {
  const Dimaze d = generate({Family::kStar, 2});
  EXPECT_THROW(exchange(d, d.ids({"c"}), d.ids({"c"}), d.at("c")),
               ContractViolation);
  EXPECT_THROW(exchange(d, d.all_vertices(), d.ids({"e1"}), d.at("c")),
               ContractViolation);
}

TEST(ExchangeTest, RandomInstancesGiveIndependentExchange) {
  std::mt19937_64 rng(22);
  int exchanges = 0;
  for (int i = 0; i < 3000 && exchanges < 200; ++i) {
    const Dimaze d = oracle::RandomDimaze(rng, 3 + i % 6, 0.45, 0.35);
    const VertexSet a = oracle::RandomSubset(rng, d.size(), 0.4);
    const VertexSet b = oracle::RandomSubset(rng, d.size(), 0.5);
    const VertexSet a_minus_b = set_minus(a, b);
    if (a_minus_b.empty()) continue;
    if (!is_independent(d, a).independent || !is_independent(d, b).independent) {
      continue;
    }
    const Vertex v = *a_minus_b.begin();
    auto r = exchange(d, a, b, v);
    const VertexSet jv = with(b, v);
    EXPECT_TRUE(is_linkage(d, r.witness));
    if (r.kind == ExchangeResult::Kind::kNoneNeeded) {
      EXPECT_TRUE(oracle::Linkable(d, jv));
      continue;
    }
    ++exchanges;
    EXPECT_TRUE(b.count(r.u));
    EXPECT_FALSE(a.count(r.u));
    EXPECT_EQ(r.witness.ini(), set_minus(jv, {r.u}));
    EXPECT_TRUE(oracle::Linkable(d, set_minus(jv, {r.u})));
  }
  EXPECT_GT(exchanges, 50);
}

TEST(CombTraceTest, AltCombDepthThree) {
  const Dimaze d = generate({Family::kAltComb, 3});
  auto tr = comb_trace(d, d.ids({"x1", "x2", "x3"}), d.at("y0"), 10);
  EXPECT_EQ(format_linkage(d, tr.blue), "x1>y0;x2>y1;x3>y2");
  EXPECT_EQ(format_linkage(d, tr.red), "x1>y1;x2>y2;x3>y3;y0");
  EXPECT_EQ(tr.prefix.depth, 3);
  EXPECT_EQ(tr.stop, CombTrace::Stop::kBoundary);
  EXPECT_EQ(stop_name(tr.stop), "boundary");
  EXPECT_EQ(tr.stopped_at, 4);
  EXPECT_EQ(Names(d, tr.prefix.x),
            (std::vector<std::string>{"y0", "x1", "x2", "x3"}));
  EXPECT_EQ(Names(d, tr.prefix.q), (std::vector<std::string>{"x1", "x2", "x3"}));
  EXPECT_EQ(Names(d, tr.prefix.p),
            (std::vector<std::string>{"y0", "y1", "y2", "y3"}));
  EXPECT_TRUE(comb_prefix_problems(d, tr).empty());
}

TEST(CombTraceTest, MaxDepthStopsEarly) {
  const Dimaze d = generate({Family::kAltComb, 4});
  auto tr = comb_trace(d, d.ids({"x1", "x2", "x3", "x4"}), d.at("y0"), 2);
  EXPECT_EQ(tr.prefix.depth, 2);
  EXPECT_EQ(tr.stop, CombTrace::Stop::kMaxDepth);
  EXPECT_TRUE(comb_prefix_problems(d, tr).empty());
}

TEST(CombTraceTest, StarAndPathStayShallow) {
  const Dimaze star = generate({Family::kStar, 3});
  auto a = comb_trace(star, star.ids({"e1"}), star.at("c"), 10);
  EXPECT_LE(a.prefix.depth, 1);
  EXPECT_TRUE(comb_prefix_problems(star, a).empty());
  const Dimaze path = generate({Family::kPath, 3});
  const Vertex first = 0;
  VertexSet empty;
  auto b = comb_trace(path, empty, first, 10);
  EXPECT_LE(b.prefix.depth, 1);
  EXPECT_TRUE(comb_prefix_problems(path, b).empty());
}

TEST(CombTraceTest, Preconditions) {
  const Dimaze d = generate({Family::kStar, 2});
  EXPECT_THROW(comb_trace(d, d.ids({"c"}), d.at("c"), 3), ContractViolation);
  EXPECT_THROW(comb_trace(d, d.ids({"e1", "e2"}), d.at("c"), 3),
               ContractViolation);
}

TEST(CombTraceTest, RandomPrefixesAreWellFormed) {
  std::mt19937_64 rng(23);
  int traced = 0;
  for (int i = 0; i < 4000 && traced < 300; ++i) {
    const Dimaze d = oracle::RandomDimaze(rng, 3 + i % 7, 0.45, 0.35);
    const VertexSet s = oracle::RandomSubset(rng, d.size(), 0.4);
    const Vertex x0 = static_cast<Vertex>(i % d.size());
    if (s.count(x0) || !is_independent(d, with(s, x0)).independent) continue;
    auto tr = comb_trace(d, s, x0, 8);
    EXPECT_TRUE(comb_prefix_problems(d, tr).empty()) << serialize(d);
    EXPECT_EQ(tr.prefix.x.size(), static_cast<std::size_t>(tr.prefix.depth) + 1);
    EXPECT_EQ(tr.prefix.q.size(), static_cast<std::size_t>(tr.prefix.depth));
    ++traced;
  }
  EXPECT_GT(traced, 100);
}

TEST(DaggerTest, NoCounterexampleOnFamilies) {
  for (auto [family, name] : kFamilyNames) {
    const Dimaze d = generate({family, 3, 2, 2});
    if (d.size() > 16) continue;
    EXPECT_TRUE(check_dagger(d).empty()) << name;
  }
}

TEST(DaggerTest, NoCounterexampleOnRandomDimazes) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 200; ++i) {
    EXPECT_TRUE(check_dagger(oracle::RandomDimaze(rng, 1 + i % 8)).empty());
  }
}

}  // namespace
}  // namespace gammoid
