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

#ifndef ARBBLOCK_ARBORESCENCE_HPP_
#define ARBBLOCK_ARBORESCENCE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "arbblock/graph.hpp"
#include "arbblock/laminar.hpp"

namespace arbblock {

struct Arborescence {
  NodeId root = 0;
  std::vector<ArcId> arcs;  // sorted

  friend bool operator==(const Arborescence&, const Arborescence&) = default;
};

// True iff `arcs` is a spanning arborescence of `graph` rooted at `root`.
bool IsSpanningArborescence(const Digraph& graph, NodeId root,
                            std::span<const ArcId> arcs);

struct CostedArborescence {
  Arborescence arborescence;
  Cost cost = 0;
};

// Minimum-cost spanning arborescence rooted at `root`. Among optima the one
// built from the smallest arc ids is returned. Throws NoArborescence when no
// spanning root-arborescence exists.
CostedArborescence MinCostArborescence(const Digraph& graph,
                                       const ArcAttribute& cost, NodeId root);

// Optimal dual structure of the minimum-cost arborescence problem.
//
// An arborescence rooted at `root` has minimum cost iff it uses only
// `tight_arcs` and enters every member of `laminar` exactly once.
//
// Duals: `laminar` holds the sets with positive dual value (`duals` is
// parallel to it). Singleton duals may be zero or negative when costs are;
// those singletons are left out of `laminar` (every arborescence enters each
// non-root node exactly once anyway) and their value is kept in
// `head_offset`. For every arc a not entering the root:
//   reduced(a) = c(a) - head_offset[head(a)] - sum of duals of members
//                entered by a
// is zero when a is tight and positive otherwise. Arcs entering the root are
// never tight.
struct TightStructure {
  NodeId root = 0;
  std::vector<ArcId> tight_arcs;  // sorted
  LaminarFamily laminar;
  std::vector<Cost> duals;
  std::vector<Cost> head_offset;
};

TightStructure ComputeTightStructure(const Digraph& graph,
                                     const ArcAttribute& cost, NodeId root);

// Both characterisations of L-tightness. IsLTight evaluates both and
// throws if they ever disagree.
bool IsLTightByEntering(const Digraph& graph, const LaminarFamily& laminar,
                        const Arborescence& arborescence);
bool IsLTightByRestriction(const Digraph& graph, const LaminarFamily& laminar,
                           const Arborescence& arborescence);
bool IsLTight(const Digraph& graph, const LaminarFamily& laminar,
              const Arborescence& arborescence);

// Finds an L-tight arborescence, trying `root` only if given and otherwise
// every root in ascending id order.
std::optional<Arborescence> FindLTight(const Digraph& graph,
                                       const LaminarFamily& laminar,
                                       std::optional<NodeId> root = {});

// Nodes from which every node is reachable.
NodeSet RootSet(const Digraph& graph);

}  // namespace arbblock

#endif  // ARBBLOCK_ARBORESCENCE_HPP_
