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

#ifndef ARBBLOCK_ORACLE_HPP_
#define ARBBLOCK_ORACLE_HPP_

#include <optional>
#include <vector>

#include "arbblock/arborescence.hpp"
#include "arbblock/graph.hpp"
#include "arbblock/laminar.hpp"

// Exhaustive reference implementations. Exponential on purpose and
// deliberately free of any code path the solvers use; the only shared
// pieces are the value types.
namespace arbblock::oracle {

inline constexpr int kMaxNodes = 7;
inline constexpr int kMaxArcs = 14;

// Every spanning arborescence, optionally only those rooted at `root`.
// Throws ResourceLimit beyond kMaxNodes nodes or kMaxArcs arcs.
std::vector<Arborescence> EnumerateArborescences(
    const Digraph& graph, std::optional<NodeId> root = std::nullopt);

// Straight from the definition: at most one entering arc per member, none
// for members holding the root.
bool IsLTightDirect(const Digraph& graph, const std::vector<NodeSet>& family,
                    const Arborescence& arborescence);

struct HittingSet {
  Weight gamma = 0;  // kInfiniteWeight if some target is empty
  std::vector<ArcId> arcs;
};

// Lightest arc set meeting every target; ties go to the lexicographically
// smallest sorted id list.
HittingSet MinimumHittingSet(const std::vector<Arborescence>& targets,
                             const ArcAttribute& weight);

HittingSet CoverTight(const Digraph& graph, const std::vector<NodeSet>& family,
                      const ArcAttribute& weight);
Weight Gamma(const Digraph& graph, const std::vector<NodeSet>& family,
             const ArcAttribute& weight);

// Minimum-cost arborescences, rooted at `root` or at any node.
std::vector<Arborescence> MinCostArborescences(const Digraph& graph,
                                               std::optional<NodeId> root,
                                               const ArcAttribute& cost,
                                               Cost* optimum = nullptr);
HittingSet CoverMinCost(const Digraph& graph, std::optional<NodeId> root,
                        const ArcAttribute& cost, const ArcAttribute& weight);

// Minimum over disjoint non-empty Z1, Z2 of in-weight(Z1) + in-weight(Z2);
// kInfiniteWeight below two nodes.
Weight Mu(const Digraph& graph, const ArcAttribute& weight);

}  // namespace arbblock::oracle

#endif  // ARBBLOCK_ORACLE_HPP_
