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

#ifndef ARBBLOCK_BLOCKER_HPP_
#define ARBBLOCK_BLOCKER_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "arbblock/graph.hpp"
#include "arbblock/laminar.hpp"

namespace arbblock {

// Arcs entering `z` that leave no member of `laminar` meeting `z`.
std::vector<ArcId> LCut(const Digraph& graph, const LaminarFamily& laminar,
                        std::span<const NodeId> z);
// Total weight of LCut.
Weight FValue(const Digraph& graph, const LaminarFamily& laminar,
              const ArcAttribute& weight, std::span<const NodeId> z);

// Witness of an optimal blocker: a family member and two disjoint non-empty
// subsets of it. All node ids refer to the input digraph.
struct DoubleCutCertificate {
  NodeSet family_set;
  NodeSet z1;
  NodeSet z2;
  // Set when the winning double cut was found in the graph whose arcs were
  // pulled onto this node; empty for the anchored graph.
  std::optional<NodeId> anchor_override;
  Weight value = 0;
};

struct BlockerResult {
  // Weight of `arcs`. kInfiniteWeight when nothing can block (a single-node
  // graph still holds the empty arborescence).
  Weight gamma = 0;
  std::vector<ArcId> arcs;  // sorted
  // Absent when there was nothing to block or nothing can block.
  std::optional<DoubleCutCertificate> certificate;
  std::uint64_t min_cut_calls = 0;

  bool blockable() const { return gamma != kInfiniteWeight; }
};

// Minimum-weight arc set meeting every L-tight arborescence of `graph`. The
// full node set is added to `laminar` when missing.
BlockerResult CoverTightArborescences(const Digraph& graph,
                                      const LaminarFamily& laminar,
                                      const ArcAttribute& weight);

// Minimum-weight arc set meeting every minimum-cost arborescence rooted at
// `root`. Throws NoArborescence when there is no such arborescence.
BlockerResult SolveBlocker(const Digraph& graph, NodeId root,
                           const ArcAttribute& cost,
                           const ArcAttribute& weight);

}  // namespace arbblock

#endif  // ARBBLOCK_BLOCKER_HPP_
