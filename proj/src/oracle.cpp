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

#include "arbblock/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "arbblock/error.hpp"

namespace arbblock::oracle {
namespace {

void RequireSmall(const Digraph& graph) {
  if (graph.node_count() > kMaxNodes ||
      graph.arc_count() > static_cast<std::size_t>(kMaxArcs)) {
    Fail(ErrorCode::kResourceLimit,
         "exhaustive search is limited to " + std::to_string(kMaxNodes) +
             " nodes and " + std::to_string(kMaxArcs) + " arcs");
  }
}

bool Contains(const NodeSet& set, NodeId v) {
  return std::binary_search(set.begin(), set.end(), v);
}

}  // namespace

std::vector<Arborescence> EnumerateArborescences(const Digraph& graph,
                                                 std::optional<NodeId> root) {
  RequireSmall(graph);
  const int n = graph.node_count();
  std::vector<Arborescence> found;
  for (NodeId r = 0; r < n; ++r) {
    if (root && *root != r) continue;
    // One entering arc per non-root node, odometer style.
    std::vector<NodeId> others;
    std::vector<std::vector<const Arc*>> choices;
    bool possible = true;
    for (NodeId v = 0; v < n; ++v) {
      if (v == r) continue;
      std::vector<const Arc*> entering;
      for (const Arc& a : graph.arcs()) {
        if (a.head == v) entering.push_back(&a);
      }
      if (entering.empty()) possible = false;
      others.push_back(v);
      choices.push_back(std::move(entering));
    }
    if (!possible) continue;
    std::vector<std::size_t> pick(others.size(), 0);
    while (true) {
      std::vector<NodeId> parent(n, -1);
      for (std::size_t i = 0; i < others.size(); ++i) {
        parent[others[i]] = choices[i][pick[i]]->tail;
      }
      bool acyclic = true;
      for (NodeId v : others) {
        NodeId x = v;
        int steps = 0;
        while (x != r && steps <= n) {
          x = parent[x];
          ++steps;
        }
        if (x != r) {
          acyclic = false;
          break;
        }
      }
      if (acyclic) {
        Arborescence b;
        b.root = r;
        for (std::size_t i = 0; i < others.size(); ++i) {
          b.arcs.push_back(choices[i][pick[i]]->id);
        }
        std::sort(b.arcs.begin(), b.arcs.end());
        found.push_back(std::move(b));
      }
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == choices[i].size()) {
        pick[i] = 0;
        ++i;
      }
      if (i == pick.size()) break;
    }
  }
  return found;
}

bool IsLTightDirect(const Digraph& graph, const std::vector<NodeSet>& family,
                    const Arborescence& arborescence) {
  for (const NodeSet& set : family) {
    int entering = 0;
    for (ArcId id : arborescence.arcs) {
      const Arc& a = graph.arc(id);
      if (Contains(set, a.head) && !Contains(set, a.tail)) ++entering;
    }
    if (entering > 1) return false;
    if (Contains(set, arborescence.root) && entering > 0) return false;
  }
  return true;
}

HittingSet MinimumHittingSet(const std::vector<Arborescence>& targets,
                             const ArcAttribute& weight) {
  HittingSet best;
  if (targets.empty()) return best;
  std::vector<ArcId> ground;
  for (const Arborescence& b : targets) {
    if (b.arcs.empty()) {
      best.gamma = kInfiniteWeight;
      return best;
    }
    ground.insert(ground.end(), b.arcs.begin(), b.arcs.end());
  }
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
  if (ground.size() > static_cast<std::size_t>(kMaxArcs)) {
    Fail(ErrorCode::kResourceLimit, "hitting set ground set too large");
  }
  std::vector<std::uint32_t> masks;
  for (const Arborescence& b : targets) {
    std::uint32_t mask = 0;
    for (ArcId id : b.arcs) {
      auto pos = std::lower_bound(ground.begin(), ground.end(), id);
      mask |= 1u << (pos - ground.begin());
    }
    masks.push_back(mask);
  }
  best.gamma = kInfiniteWeight;
  const std::uint32_t limit = 1u << ground.size();
  for (std::uint32_t subset = 0; subset < limit; ++subset) {
    bool hits = std::all_of(masks.begin(), masks.end(),
                            [&](std::uint32_t m) { return (m & subset) != 0; });
    if (!hits) continue;
    Weight total = 0;
    std::vector<ArcId> ids;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if (subset & (1u << i)) {
        total += weight[ground[i]];
        ids.push_back(ground[i]);
      }
    }
    if (total < best.gamma || (total == best.gamma && ids < best.arcs)) {
      best.gamma = total;
      best.arcs = std::move(ids);
    }
  }
  return best;
}

HittingSet CoverTight(const Digraph& graph, const std::vector<NodeSet>& family,
                      const ArcAttribute& weight) {
  std::vector<Arborescence> tight;
  for (Arborescence& b : EnumerateArborescences(graph)) {
    if (IsLTightDirect(graph, family, b)) tight.push_back(std::move(b));
  }
  return MinimumHittingSet(tight, weight);
}

Weight Gamma(const Digraph& graph, const std::vector<NodeSet>& family,
             const ArcAttribute& weight) {
  return CoverTight(graph, family, weight).gamma;
}

std::vector<Arborescence> MinCostArborescences(const Digraph& graph,
                                               std::optional<NodeId> root,
                                               const ArcAttribute& cost,
                                               Cost* optimum) {
  std::vector<Arborescence> all = EnumerateArborescences(graph, root);
  std::vector<Arborescence> best;
  Cost best_cost = 0;
  for (Arborescence& b : all) {
    Cost c = 0;
    for (ArcId id : b.arcs) c += cost[id];
    if (best.empty() || c < best_cost) {
      best.clear();
      best_cost = c;
    }
    if (c == best_cost) best.push_back(std::move(b));
  }
  if (optimum != nullptr) *optimum = best_cost;
  return best;
}

HittingSet CoverMinCost(const Digraph& graph, std::optional<NodeId> root,
                        const ArcAttribute& cost, const ArcAttribute& weight) {
  return MinimumHittingSet(MinCostArborescences(graph, root, cost), weight);
}

Weight Mu(const Digraph& graph, const ArcAttribute& weight) {
  const int n = graph.node_count();
  if (n > kMaxNodes) {
    Fail(ErrorCode::kResourceLimit, "double cut enumeration limited to " +
                                        std::to_string(kMaxNodes) + " nodes");
  }
  if (n < 2) return kInfiniteWeight;
  // Label every node 0 (neither), 1 (Z1) or 2 (Z2).
  std::vector<int> label(n, 0);
  Weight best = kInfiniteWeight;
  while (true) {
    bool has1 = std::find(label.begin(), label.end(), 1) != label.end();
    bool has2 = std::find(label.begin(), label.end(), 2) != label.end();
    if (has1 && has2) {
      Weight total = 0;
      for (const Arc& a : graph.arcs()) {
        if (label[a.head] != 0 && label[a.tail] != label[a.head]) {
          total += weight[a.id];
        }
      }
      best = std::min(best, total);
    }
    int i = 0;
    while (i < n && ++label[i] == 3) {
      label[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return best;
}

}  // namespace arbblock::oracle
