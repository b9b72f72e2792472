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

#ifndef ARBBLOCK_MINCUT_HPP_
#define ARBBLOCK_MINCUT_HPP_

#include <atomic>
#include <cstdint>
#include <optional>

#include "arbblock/graph.hpp"

namespace arbblock {

// Counts minimum s-t cut computations. Safe to share between threads.
struct CutStats {
  std::atomic<std::uint64_t> min_cut_calls{0};
};

struct CutResult {
  Weight value = 0;
  NodeSet source_side;
};

// A pair of disjoint non-empty node sets and the sum of their weighted
// in-degrees. `value == kInfiniteWeight` (with empty sets) means no pair
// exists or none beat the requested bound.
struct DoubleCut {
  Weight value = kInfiniteWeight;
  NodeSet z1;
  NodeSet z2;

  bool finite() const { return value != kInfiniteWeight; }
};

// Minimum weight of arcs leaving a set that contains s and avoids t. The
// returned source side is the inclusion-minimal optimal one.
CutResult MinStCut(const Digraph& graph, const ArcAttribute& weight, NodeId s,
                   NodeId t, CutStats* stats = nullptr);

struct RootedCut {
  Weight value = 0;
  NodeSet z;
};

// min { in-weight(Z) : Z non-empty, t not in Z }, solved as n-1 cuts out of
// t. Ties go to the smallest sink node, then to the smallest Z.
RootedCut MinRootedCutAvoiding(const Digraph& graph, const ArcAttribute& weight,
                               NodeId t, CutStats* stats = nullptr);

// A node t maximising MinRootedCutAvoiding(t).value, smallest id on ties.
// Every non-empty Z avoiding t then has in-weight at least half the minimum
// double cut.
NodeId AnchorNode(const Digraph& graph, const ArcAttribute& weight,
                  CutStats* stats = nullptr);

// Two-copy auxiliary graph: copy 1 holds every arc reversed, copy 2 keeps
// them as is, and v1 -> v2 carries `infinite_weight`. Node v of the input
// maps to v (copy 1) and n + v (copy 2).
struct DoubleCutAux {
  Digraph graph;
  ArcAttribute weight;
  // Aux arc id -> originating arc id, or -1 for the v1 -> v2 arcs.
  std::vector<ArcId> provenance;
  Weight infinite_weight = 0;
};

DoubleCutAux BuildDoubleCutAux(const Digraph& graph,
                               const ArcAttribute& weight);

// Minimum double cut. With `fixed_source` only pairs whose first set
// contains that node are searched. Only pairs with value < `bound` are
// reported; the default bound reports the true minimum. Ties go to the
// smallest (s, t), then the minimal source side. Graphs with fewer than two
// nodes yield an infinite value.
DoubleCut MinDoubleCut(const Digraph& graph, const ArcAttribute& weight,
                       std::optional<NodeId> fixed_source = std::nullopt,
                       Weight bound = kInfiniteWeight,
                       CutStats* stats = nullptr);

}  // namespace arbblock

#endif  // ARBBLOCK_MINCUT_HPP_
