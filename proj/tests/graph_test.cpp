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
#include "arbblock/graph.hpp"
#include "arbblock/laminar.hpp"
#include "doctest.h"
#include "support.hpp"

namespace arbblock {
namespace {

using testing::I1;
using testing::I2;
using testing::I3;
using testing::Unit;

std::vector<ArcId> Ids(const Digraph& g) { return g.ArcIds(); }

TEST_CASE("digraph rejects malformed input") {
  CHECK_THROWS_AS(Digraph(2, {{0, 1, 1}}), Error);
  CHECK_THROWS_AS(Digraph(2, {{0, 0, 2}}), Error);
  CHECK_THROWS_AS(Digraph(2, {{0, 0, 1}, {0, 1, 0}}), Error);
  CHECK_THROWS_AS(Digraph(2, {{-1, 0, 1}}), Error);
  CHECK_NOTHROW(Digraph(2, {{0, 0, 1}, {7, 0, 1}}));  // parallel arcs are fine
  try {
    Digraph(2, {{0, 1, 1}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
  }
}

TEST_CASE("induced subgraph") {
  SUBCASE("path restricted to its first two nodes") {
    Digraph g = InducedSubgraph(I3(), NodeSet{0, 1});
    CHECK(g.node_count() == 2);
    CHECK(Ids(g) == std::vector<ArcId>{0});
  }
  SUBCASE("whole node set keeps every arc") {
    CHECK(Ids(InducedSubgraph(I1(), NodeSet{0, 1, 2})) == Ids(I1()));
  }
  SUBCASE("I1 on {a,b}") {
    Digraph g = InducedSubgraph(I1(), NodeSet{1, 2});
    CHECK(Ids(g) == std::vector<ArcId>{2, 3});
    CHECK(g.ToParent(NodeSet{0, 1}) == NodeSet{1, 2});
    CHECK(g.FromParent(NodeSet{0, 2}) == NodeSet{1});
  }
  SUBCASE("empty set is rejected") {
    CHECK_THROWS_AS(InducedSubgraph(I1(), {}), Error);
  }
}

TEST_CASE("nested induction equals direct induction") {
  testing::Rng rng(11);
  for (int round = 0; round < 100; ++round) {
    int n = static_cast<int>(rng.Uniform(2, 7));
    Digraph g = testing::RandomGraph(rng, n, static_cast<int>(rng.Uniform(0, 14)));
    NodeSet z = testing::RandomNonEmptySubset(rng, n);
    Digraph outer = InducedSubgraph(g, z);
    NodeSet z_local = testing::RandomNonEmptySubset(rng, outer.node_count());
    NodeSet inner_parent = outer.ToParent(z_local);
    CHECK(Ids(InducedSubgraph(outer, z_local)) ==
          Ids(InducedSubgraph(g, inner_parent)));
  }
}

TEST_CASE("relocate tail") {
  SUBCASE("I1, e1 moves onto a") {
    Digraph g = RelocateTail(I1(), 1, 1);
    CHECK(g.arc(1) == Arc{1, 1, 2});
    CHECK(g.arc(2) == Arc{2, 1, 2});
    CHECK(g.arc_count() == 4);
  }
  SUBCASE("own tail is the identity") {
    Digraph base = I1();
    Digraph g = RelocateTail(base, 2, 1);
    CHECK(std::equal(g.arcs().begin(), g.arcs().end(), base.arcs().begin(),
                     base.arcs().end()));
  }
  SUBCASE("I2, e0 moves onto b") {
    Digraph g = RelocateTail(I2(), 0, 2);
    CHECK(g.arc(0) == Arc{0, 2, 1});
    CHECK(g.arc(1) == Arc{1, 1, 2});
    CHECK(g.arc(2) == Arc{2, 2, 1});
  }
  SUBCASE("creating a loop is rejected") {
    CHECK_THROWS_AS(RelocateTail(I1(), 0, 1), Error);
  }
}

TEST_CASE("relocation preserves in-weight of sets it does not straddle") {
  testing::Rng rng(12);
  for (int round = 0; round < 200; ++round) {
    int n = static_cast<int>(rng.Uniform(2, 6));
    Digraph g = testing::RandomGraph(rng, n, static_cast<int>(rng.Uniform(1, 10)));
    if (g.arc_count() == 0) continue;
    ArcAttribute w = testing::RandomAttribute(rng, g.arc_count(), 0, 5);
    const Arc& a = g.arcs()[rng.Uniform(0, static_cast<int>(g.arc_count()) - 1)];
    NodeId tail = static_cast<NodeId>(rng.Uniform(0, n - 1));
    if (tail == a.head) continue;
    Digraph moved = RelocateTail(g, a.id, tail);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      NodeSet z = testing::FromMask(mask, n);
      if (testing::In(z, a.tail) != testing::In(z, tail)) continue;
      CHECK(WeightedIndegree(moved, w, z) == WeightedIndegree(g, w, z));
    }
  }
}

TEST_CASE("weighted indegree") {
  CHECK(WeightedIndegree(I3(), Unit(I3()), NodeSet{2}) == 1);
  CHECK(WeightedIndegree(I1(), Unit(I1()), NodeSet{0, 1, 2}) == 0);
  CHECK(WeightedIndegree(I1(), Unit(I1()), NodeSet{1, 2}) == 2);
  CHECK(WeightedIndegree(I1(), ArcAttribute({4, 3, 9, 9}), NodeSet{1, 2}) == 7);
  CHECK(EnteringArcs(I1(), NodeSet{1, 2}) == std::vector<ArcId>{0, 1});
}

TEST_CASE("weighted indegree matches the definition") {
  testing::Rng rng(13);
  for (int round = 0; round < 100; ++round) {
    int n = static_cast<int>(rng.Uniform(1, 6));
    Digraph g = testing::RandomGraph(rng, n, static_cast<int>(rng.Uniform(0, 10)));
    ArcAttribute w = testing::RandomAttribute(rng, g.arc_count(), 0, 7);
    NodeSet z = testing::RandomNonEmptySubset(rng, n);
    CHECK(WeightedIndegree(g, w, z) == testing::Rho(g, w, z));
  }
}

TEST_CASE("arc subsets") {
  CHECK(Ids(DeleteArcs(I1(), std::vector<ArcId>{0, 2})) ==
        std::vector<ArcId>{1, 3});
  CHECK(Ids(KeepArcs(I1(), std::vector<ArcId>{0, 2})) ==
        std::vector<ArcId>{0, 2});
  CHECK(TotalWeight(I1(), ArcAttribute({1, 2, 3, 4})) == 10);
}

TEST_CASE("node set helpers") {
  CHECK(MakeNodeSet({3, 1, 3}) == NodeSet{1, 3});
  CHECK(IsNodeSet(std::vector<NodeId>{0, 2}, 3));
  CHECK_FALSE(IsNodeSet(std::vector<NodeId>{2, 0}, 3));
  CHECK_FALSE(IsNodeSet(std::vector<NodeId>{0, 3}, 3));
}

TEST_CASE("laminar family validation") {
  CHECK_NOTHROW(LaminarFamily(4, {{0, 1}, {0, 1, 2, 3}, {2}}));
  CHECK_THROWS_AS(LaminarFamily(3, {{0, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(LaminarFamily(3, {{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(LaminarFamily(3, {{}}), Error);
  CHECK_THROWS_AS(LaminarFamily(3, {{0, 3}}), Error);
  CHECK(IsLaminarPair({0, 1}, {2}));
  CHECK(IsLaminarPair({0, 1}, {0, 1, 2}));
  CHECK_FALSE(IsLaminarPair({0, 1}, {1, 2}));
}

TEST_CASE("laminar family canonical order and queries") {
  LaminarFamily l(4, {{0, 1, 2, 3}, {2, 3}, {1}, {0, 1}});
  REQUIRE(l.size() == 4);
  CHECK(l[0] == NodeSet{1});
  CHECK(l[1] == NodeSet{0, 1});
  CHECK(l[2] == NodeSet{2, 3});
  CHECK(l[3] == NodeSet{0, 1, 2, 3});
  CHECK(l.Contains(2, 3));
  CHECK_FALSE(l.Contains(2, 1));
  CHECK(l.HasMember({2, 3}));
  CHECK(l.WithFullSet() == l);
  CHECK(LaminarFamily(4, {{1}}).WithFullSet().size() == 2);

  Digraph g(4, {{0, 0, 1}, {1, 2, 3}});
  Digraph inside = InducedSubgraph(g, NodeSet{0, 1});
  LaminarFamily r = l.Restrict(inside);
  CHECK(r.node_count() == 2);
  CHECK(r.size() == 2);
  CHECK(r[0] == NodeSet{1});
  CHECK(r[1] == NodeSet{0, 1});
}

TEST_CASE("random laminar families are accepted, crossing ones rejected") {
  testing::Rng rng(14);
  for (int round = 0; round < 200; ++round) {
    int n = static_cast<int>(rng.Uniform(1, 6));
    std::vector<NodeSet> sets = testing::RandomLaminarSets(rng, n, 5);
    CHECK_NOTHROW(LaminarFamily(n, sets));
    NodeSet extra = testing::RandomNonEmptySubset(rng, n);
    bool crosses = std::any_of(sets.begin(), sets.end(), [&](const NodeSet& s) {
      return testing::Crosses(s, extra);
    });
    bool dup = std::find(sets.begin(), sets.end(), extra) != sets.end();
    sets.push_back(extra);
    if (crosses || dup) {
      CHECK_THROWS_AS(LaminarFamily(n, sets), Error);
    } else {
      CHECK_NOTHROW(LaminarFamily(n, sets));
    }
  }
}

}  // namespace
}  // namespace arbblock
