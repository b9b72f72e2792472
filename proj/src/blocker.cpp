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

#include "arbblock/blocker.hpp"

#include <algorithm>
#include <string>

#include "arbblock/arborescence.hpp"
#include "arbblock/error.hpp"
#include "arbblock/mincut.hpp"

namespace arbblock {
namespace {

void RequireWeights(const Digraph& graph, const ArcAttribute& weight) {
  if (!weight.Covers(graph)) {
    Fail(ErrorCode::kInvalidArgument, "weight is not defined on every arc");
  }
  for (const Arc& a : graph.arcs()) {
    if (weight[a.id] < 0) {
      Fail(ErrorCode::kInvalidArgument,
           "arc " + std::to_string(a.id) + " has a negative weight");
    }
  }
}

// Moves the tail of every arc leaving a member that contains `a` onto `a`.
Digraph PullOnto(const Digraph& graph, const LaminarFamily& family, NodeId a) {
  std::vector<Arc> arcs(graph.arcs().begin(), graph.arcs().end());
  for (std::size_t f = 0; f < family.size(); ++f) {
    if (!family.Contains(f, a)) continue;
    for (Arc& arc : arcs) {
      if (family.Contains(f, arc.tail) && !family.Contains(f, arc.head)) {
        arc.tail = a;
      }
    }
  }
  return graph.WithArcs(std::move(arcs));
}

}  // namespace

std::vector<ArcId> LCut(const Digraph& graph, const LaminarFamily& laminar,
                        std::span<const NodeId> z) {
  if (laminar.node_count() != graph.node_count()) {
    Fail(ErrorCode::kInvalidArgument,
         "laminar family and graph have different node sets");
  }
  if (z.empty() || !IsNodeSet(z, graph.node_count())) {
    Fail(ErrorCode::kInvalidArgument, "L-cut needs a non-empty node set");
  }
  std::vector<char> in_z = Membership(z, graph.node_count());
  std::vector<std::size_t> meeting;
  for (std::size_t f = 0; f < laminar.size(); ++f) {
    if (std::any_of(z.begin(), z.end(),
                    [&](NodeId v) { return laminar.Contains(f, v); })) {
      meeting.push_back(f);
    }
  }
  std::vector<ArcId> cut;
  for (const Arc& a : graph.arcs()) {
    if (!in_z[a.head] || in_z[a.tail]) continue;
    bool leaves_meeting = std::any_of(
        meeting.begin(), meeting.end(), [&](std::size_t f) {
          return laminar.Contains(f, a.tail) && !laminar.Contains(f, a.head);
        });
    if (!leaves_meeting) cut.push_back(a.id);
  }
  std::sort(cut.begin(), cut.end());
  return cut;
}

Weight FValue(const Digraph& graph, const LaminarFamily& laminar,
              const ArcAttribute& weight, std::span<const NodeId> z) {
  Weight total = 0;
  for (ArcId id : LCut(graph, laminar, z)) total += weight[id];
  return total;
}

BlockerResult CoverTightArborescences(const Digraph& graph,
                                      const LaminarFamily& laminar,
                                      const ArcAttribute& weight) {
  if (laminar.node_count() != graph.node_count()) {
    Fail(ErrorCode::kInvalidArgument,
         "laminar family and graph have different node sets");
  }
  RequireWeights(graph, weight);
  BlockerResult result;
  if (graph.node_count() == 0) return result;
  const LaminarFamily family = laminar.WithFullSet();
  if (!FindLTight(graph, family)) return result;

  CutStats stats;

  // Anchor every member, smallest first, pulling the arcs that leave it onto
  // its anchor.
  Digraph anchored = graph;
  for (std::size_t f = 0; f < family.size(); ++f) {
    const NodeSet& set = family[f];
    if (set.size() < 2) continue;
    Digraph inside = InducedSubgraph(anchored, set);
    NodeId anchor = set[AnchorNode(inside, weight, &stats)];
    std::vector<Arc> arcs(anchored.arcs().begin(), anchored.arcs().end());
    for (Arc& arc : arcs) {
      if (family.Contains(f, arc.tail) && !family.Contains(f, arc.head)) {
        arc.tail = anchor;
      }
    }
    anchored = anchored.WithArcs(std::move(arcs));
  }

  // The L-cuts of a pair in the original graph form the blocker.
  auto extract = [&](std::size_t f, const NodeSet& z1, const NodeSet& z2) {
    Digraph inside = InducedSubgraph(graph, family[f]);
    LaminarFamily inner = family.Restrict(inside);
    std::vector<ArcId> arcs = LCut(inside, inner, inside.FromParent(z1));
    std::vector<ArcId> second = LCut(inside, inner, inside.FromParent(z2));
    arcs.insert(arcs.end(), second.begin(), second.end());
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return arcs;
  };

  std::vector<std::optional<Digraph>> pulled(graph.node_count());
  DoubleCut best;
  std::size_t best_set = 0;
  std::optional<NodeId> best_override;
  std::vector<ArcId> arcs;
  // Equal values are reported too; among them the smaller arc set wins.
  auto offer = [&](const DoubleCut& cut, const Digraph& inside, std::size_t f,
                   std::optional<NodeId> override) {
    if (!cut.finite() || cut.value > best.value) return;
    NodeSet z1 = inside.ToParent(cut.z1);
    NodeSet z2 = inside.ToParent(cut.z2);
    std::vector<ArcId> candidate = extract(f, z1, z2);
    if (cut.value == best.value && !(candidate < arcs)) return;
    best = {cut.value, std::move(z1), std::move(z2)};
    best_set = f;
    best_override = override;
    arcs = std::move(candidate);
  };
  auto bound = [&] {
    return best.finite() ? best.value + 1 : kInfiniteWeight;
  };
  for (std::size_t f = 0; f < family.size(); ++f) {
    const NodeSet& set = family[f];
    if (set.size() < 2) continue;
    Digraph inside = InducedSubgraph(anchored, set);
    offer(MinDoubleCut(inside, weight, std::nullopt, bound(), &stats), inside,
          f, std::nullopt);
    for (std::size_t i = 0; i < set.size(); ++i) {
      NodeId a = set[i];
      if (!pulled[a]) pulled[a] = PullOnto(anchored, family, a);
      Digraph pulled_inside = InducedSubgraph(*pulled[a], set);
      offer(MinDoubleCut(pulled_inside, weight, static_cast<NodeId>(i),
                         bound(), &stats),
            pulled_inside, f, a);
    }
  }

  result.min_cut_calls = stats.min_cut_calls.load();
  if (!best.finite()) {
    result.gamma = kInfiniteWeight;
    return result;
  }
  const NodeSet& set = family[best_set];

  result.arcs = std::move(arcs);
  result.gamma = 0;
  for (ArcId id : result.arcs) result.gamma += weight[id];
  result.certificate = DoubleCutCertificate{set, std::move(best.z1),
                                            std::move(best.z2), best_override,
                                            best.value};
  return result;
}

BlockerResult SolveBlocker(const Digraph& graph, NodeId root,
                           const ArcAttribute& cost,
                           const ArcAttribute& weight) {
  TightStructure tight = ComputeTightStructure(graph, cost, root);
  // Tight arcs never enter the root, so every spanning arborescence left is
  // rooted there.
  Digraph restricted = KeepArcs(graph, tight.tight_arcs);
  return CoverTightArborescences(restricted, tight.laminar.WithFullSet(),
                                 weight);
}

}  // namespace arbblock
