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

#include "arbblock/error.hpp"
#include "arbblock/maxflow.hpp"
#include "arbblock/mincut.hpp"
#include "arbblock/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

namespace arbblock {
namespace {

using testing::Cycle3;
using testing::I3;
using testing::Rho;
using testing::Unit;

Digraph Star() { return Digraph(3, {{0, 0, 1}, {1, 0, 2}}); }

// Smallest in-weight of a non-empty Z avoiding t, by subset scan.
Weight RootedBrute(const Digraph& g, const ArcAttribute& w, NodeId t) {
  Weight best = kInfiniteWeight;
  const int n = g.node_count();
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    if (m & (1u << t)) continue;
    best = std::min(best, Rho(g, w, testing::FromMask(m, n)));
  }
  return best;
}

// Double cut minimum restricted to pairs with s in Z1.
Weight DoubleBrute(const Digraph& g, const ArcAttribute& w,
                   std::optional<NodeId> s) {
  const int n = g.node_count();
  Weight best = kInfiniteWeight;
  for (std::uint32_t m1 = 1; m1 < (1u << n); ++m1) {
    if (s && !(m1 & (1u << *s))) continue;
    std::uint32_t rest = ((1u << n) - 1) & ~m1;
    for (std::uint32_t m2 = rest; m2 != 0; m2 = (m2 - 1) & rest) {
      best = std::min(best, Rho(g, w, testing::FromMask(m1, n)) +
                                Rho(g, w, testing::FromMask(m2, n)));
    }
  }
  return best;
}

TEST_CASE("flow network") {
  FlowNetwork net(4);
  net.AddArc(0, 1, 2);
  net.AddArc(0, 2, 1);
  net.AddArc(1, 3, 1);
  net.AddArc(2, 3, 2);
  CHECK(net.MaxFlow(0, 3) == 2);
  CHECK(net.MaxFlow(0, 3) == 2);  // residuals reset between calls
  CHECK(net.MaxFlow(0, 3, 1) >= 1);
  CHECK(net.MaxFlow(3, 0) == 0);
}

TEST_CASE("min s-t cut") {
  SUBCASE("single arc") {
    Digraph g(2, {{0, 0, 1}});
    CutResult c = MinStCut(g, ArcAttribute({3}), 0, 1);
    CHECK(c.value == 3);
    CHECK(c.source_side == NodeSet{0});
  }
  SUBCASE("unreachable sink") {
    Digraph g(4, {{0, 0, 1}, {1, 3, 2}});
    CutResult c = MinStCut(g, Unit(g), 0, 2);
    CHECK(c.value == 0);
    CHECK(c.source_side == NodeSet{0, 1});
  }
  SUBCASE("diamond") {
    Digraph g(4, {{0, 0, 1}, {1, 0, 2}, {2, 1, 3}, {3, 2, 3}});
    CHECK(MinStCut(g, ArcAttribute({2, 1, 1, 2}), 0, 3).value == 2);
  }
  SUBCASE("same endpoints") {
    CHECK_THROWS_AS(MinStCut(I3(), Unit(I3()), 1, 1), Error);
  }
}

TEST_CASE("min rooted cut avoiding a node") {
  SUBCASE("path") {
    RootedCut c = MinRootedCutAvoiding(I3(), Unit(I3()), 2);
    CHECK(c.value == 0);
    CHECK(c.z == NodeSet{0});
  }
  SUBCASE("3-cycle") {
    for (NodeId t = 0; t < 3; ++t) {
      RootedCut c = MinRootedCutAvoiding(Cycle3(), Unit(Cycle3()), t);
      CHECK(c.value == 1);
      CHECK(c.z.size() == 1);
    }
  }
  SUBCASE("star avoiding its centre") {
    RootedCut c = MinRootedCutAvoiding(Star(), Unit(Star()), 0);
    CHECK(c.value == 1);
    CHECK(c.z == NodeSet{1});
  }
}

TEST_CASE("rooted cut matches subset scan") {
  testing::Rng rng(21);
  for (int round = 0; round < 300; ++round) {
    int n = static_cast<int>(rng.Uniform(2, 7));
    Digraph g = testing::RandomGraph(rng, n, static_cast<int>(rng.Uniform(0, 14)));
    ArcAttribute w = testing::RandomAttribute(rng, g.arc_count(), 0, 6);
    NodeId t = static_cast<NodeId>(rng.Uniform(0, n - 1));
    RootedCut c = MinRootedCutAvoiding(g, w, t);
    CHECK(c.value == RootedBrute(g, w, t));
    CHECK(!c.z.empty());
    CHECK_FALSE(testing::In(c.z, t));
    CHECK(Rho(g, w, c.z) == c.value);
  }
}

TEST_CASE("anchor node examples") {
  Digraph single(1, {});
  CHECK(AnchorNode(single, ArcAttribute()) == 0);
  CHECK(AnchorNode(Star(), Unit(Star())) == 0);
  CHECK(AnchorNode(Cycle3(), Unit(Cycle3())) == 0);
}

TEST_CASE("anchor node keeps every avoiding set above half the double cut") {
  testing::Rng rng(22);
  for (int round = 0; round < 300; ++round) {
    int n = static_cast<int>(rng.Uniform(2, 7));
    Digraph g = testing::RandomGraph(rng, n, static_cast<int>(rng.Uniform(0, 14)));
    ArcAttribute w = testing::RandomAttribute(rng, g.arc_count(), 0, 6);
    NodeId t = AnchorNode(g, w);
    Weight mu = oracle::Mu(g, w);
    CHECK(2 * RootedBrute(g, w, t) >= mu);
  }
}

TEST_CASE("double cut auxiliary graph") {
  Digraph g(2, {{0, 0, 1}});
  DoubleCutAux aux = BuildDoubleCutAux(g, Unit(g));
  REQUIRE(aux.graph.arc_count() == 4);
  // Copy 1 reversed (b1 -> a1), copy 2 kept (a2 -> b2), then v1 -> v2.
  CHECK(aux.graph.arc(0) == Arc{0, 1, 0});
  CHECK(aux.graph.arc(1) == Arc{1, 2, 3});
  CHECK(aux.graph.arc(2) == Arc{2, 0, 2});
  CHECK(aux.graph.arc(3) == Arc{3, 1, 3});
  CHECK(aux.provenance == std::vector<ArcId>{0, 0, -1, -1});
  CHECK(aux.weight[2] == aux.infinite_weight);
  CHECK(aux.infinite_weight == 2);

  testing::Rng rng(23);
  for (int round = 0; round < 50; ++round) {
    int n = static_cast<int>(rng.Uniform(2, 7));
    Digraph r = testing::RandomGraph(rng, n, static_cast<int>(rng.Uniform(0, 14)));
    CHECK(BuildDoubleCutAux(r, Unit(r)).graph.arc_count() ==
          2 * r.arc_count() + static_cast<std::size_t>(n));
  }

  DoubleCutAux path = BuildDoubleCutAux(I3(), Unit(I3()));
  CHECK(MinStCut(path.graph, path.weight, 0, 3 + 2).value == 1);
}

TEST_CASE("min double cut examples") {
  SUBCASE("path") {
    DoubleCut c = MinDoubleCut(I3(), Unit(I3()));
    CHECK(c.value == 1);
    CHECK(c.z1 == NodeSet{0});
    CHECK(c.z2 == NodeSet{1, 2});
  }
  SUBCASE("two nodes both ways") {
    Digraph g(2, {{0, 0, 1}, {1, 1, 0}});
    DoubleCut c = MinDoubleCut(g, Unit(g));
    CHECK(c.value == 2);
    CHECK(c.z1 == NodeSet{0});
    CHECK(c.z2 == NodeSet{1});
  }
  SUBCASE("3-cycle") {
    DoubleCut c = MinDoubleCut(Cycle3(), Unit(Cycle3()));
    CHECK(c.value == 2);
    CHECK(c.z1 == NodeSet{0});
    CHECK(c.z2 == NodeSet{1, 2});
  }
  SUBCASE("fewer than two nodes") {
    CHECK_FALSE(MinDoubleCut(Digraph(1, {}), ArcAttribute()).finite());
  }
  SUBCASE("bound hides values that are not below it") {
    CHECK_FALSE(MinDoubleCut(I3(), Unit(I3()), std::nullopt, 1).finite());
    CHECK(MinDoubleCut(I3(), Unit(I3()), std::nullopt, 2).value == 1);
  }
}

TEST_CASE("min double cut matches exhaustive search") {
  testing::Rng rng(24);
  for (int round = 0; round < 400; ++round) {
    int n = static_cast<int>(rng.Uniform(2, 7));
    Digraph g = testing::RandomGraph(rng, n, static_cast<int>(rng.Uniform(0, 14)));
    ArcAttribute w = testing::RandomAttribute(rng, g.arc_count(), 0, 6);
    DoubleCut c = MinDoubleCut(g, w);
    CHECK(c.value == DoubleBrute(g, w, std::nullopt));
    CHECK(c.value == oracle::Mu(g, w));
    REQUIRE(!c.z1.empty());
    REQUIRE(!c.z2.empty());
    NodeSet both;
    std::set_intersection(c.z1.begin(), c.z1.end(), c.z2.begin(), c.z2.end(),
                          std::back_inserter(both));
    CHECK(both.empty());
    CHECK(Rho(g, w, c.z1) + Rho(g, w, c.z2) == c.value);

    NodeId s = static_cast<NodeId>(rng.Uniform(0, n - 1));
    DoubleCut fixed = MinDoubleCut(g, w, s);
    CHECK(fixed.value == DoubleBrute(g, w, s));
    CHECK(testing::In(fixed.z1, s));
  }
}

TEST_CASE("cut statistics count every flow") {
  CutStats stats;
  MinDoubleCut(Cycle3(), Unit(Cycle3()), std::nullopt, kInfiniteWeight, &stats);
  CHECK(stats.min_cut_calls.load() == 6);
  MinDoubleCut(Cycle3(), Unit(Cycle3()), 1, kInfiniteWeight, &stats);
  CHECK(stats.min_cut_calls.load() == 8);
}

}  // namespace
}  // namespace arbblock
