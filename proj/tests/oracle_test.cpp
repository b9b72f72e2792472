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
#include "arbblock/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

namespace arbblock {
namespace {

using testing::I1;
using testing::I3;
using testing::Unit;

TEST_CASE("enumeration") {
  SUBCASE("3-cycle: one path per root") {
    auto all = oracle::EnumerateArborescences(testing::Cycle3());
    REQUIRE(all.size() == 3);
    for (NodeId r = 0; r < 3; ++r) {
      CHECK(all[r].root == r);
      CHECK(all[r].arcs.size() == 2);
    }
  }
  SUBCASE("single node") {
    auto all = oracle::EnumerateArborescences(Digraph(1, {}));
    REQUIRE(all.size() == 1);
    CHECK(all[0].arcs.empty());
  }
  SUBCASE("I1 rooted at r") {
    auto all = oracle::EnumerateArborescences(I1(), 0);
    std::vector<std::vector<ArcId>> arcs;
    for (const auto& b : all) arcs.push_back(b.arcs);
    std::sort(arcs.begin(), arcs.end());
    CHECK(arcs == std::vector<std::vector<ArcId>>{{0, 1}, {0, 2}, {1, 3}});
  }
  SUBCASE("size guard") {
    std::vector<Arc> arcs;
    for (int i = 0; i < 15; ++i) arcs.push_back({i, 0, 1});
    try {
      oracle::EnumerateArborescences(Digraph(2, arcs));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kResourceLimit);
    }
    CHECK_THROWS_AS(oracle::Mu(Digraph(8, {}), ArcAttribute()), Error);
  }
}

TEST_CASE("enumeration count matches the matrix-tree theorem") {
  // Rooted spanning arborescences of the complete digraph K_n: n^(n-2).
  for (int n = 2; n <= 4; ++n) {
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v) arcs.push_back({static_cast<ArcId>(arcs.size()), u, v});
      }
    }
    Digraph g(n, arcs);
    std::size_t expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= static_cast<std::size_t>(n);
    CHECK(oracle::EnumerateArborescences(g, 0).size() == expected);
  }
}

TEST_CASE("oracle gamma") {
  NodeSet all{0, 1, 2};
  CHECK(oracle::Gamma(I3(), {all}, Unit(I3())) == 1);
  CHECK(oracle::Gamma(I1(), {all, {1, 2}}, Unit(I1())) == 2);
  CHECK(oracle::Gamma(Digraph(3, {{0, 0, 1}}), {all}, ArcAttribute({1})) == 0);
  CHECK(oracle::Gamma(Digraph(1, {}), {}, ArcAttribute()) == kInfiniteWeight);
}

TEST_CASE("hitting set ties go to the smallest id list") {
  std::vector<Arborescence> targets = {{0, {0, 1}}, {0, {1, 2}}, {0, {0, 2}}};
  oracle::HittingSet h = oracle::MinimumHittingSet(targets, ArcAttribute({1, 1, 1}));
  CHECK(h.gamma == 2);
  CHECK(h.arcs == std::vector<ArcId>{0, 1});
  CHECK(oracle::MinimumHittingSet({}, ArcAttribute()).gamma == 0);
}

TEST_CASE("oracle double cut") {
  CHECK(oracle::Mu(I3(), Unit(I3())) == 1);
  CHECK(oracle::Mu(testing::Cycle3(), Unit(testing::Cycle3())) == 2);
  Digraph two(4, {{0, 0, 1}, {1, 2, 3}});
  CHECK(oracle::Mu(two, Unit(two)) == 0);
  CHECK(oracle::Mu(Digraph(1, {}), ArcAttribute()) == kInfiniteWeight);
}

TEST_CASE("min-cost enumeration") {
  Cost best = -1;
  auto all = oracle::MinCostArborescences(testing::I5(), 0, testing::I5Costs(), &best);
  CHECK(best == 2);
  REQUIRE(all.size() == 1);
  CHECK(all[0].arcs == std::vector<ArcId>{0, 2});
  CHECK(oracle::CoverMinCost(testing::I5(), 0, testing::I5Costs(),
                             Unit(testing::I5()))
            .arcs == std::vector<ArcId>{0});
}

TEST_CASE("oracle results are repeatable") {
  testing::Rng rng(51);
  for (int round = 0; round < 30; ++round) {
    int n = static_cast<int>(rng.Uniform(2, 5));
    Digraph g = testing::RandomGraph(rng, n, static_cast<int>(rng.Uniform(0, 9)));
    ArcAttribute w = testing::RandomAttribute(rng, g.arc_count(), 1, 4);
    auto sets = testing::RandomLaminarSets(rng, n, 3);
    oracle::HittingSet a = oracle::CoverTight(g, sets, w);
    oracle::HittingSet b = oracle::CoverTight(g, sets, w);
    CHECK(a.gamma == b.gamma);
    CHECK(a.arcs == b.arcs);
  }
}

}  // namespace
}  // namespace arbblock
