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

#include "arbblock/arborescence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "arbblock/error.hpp"

namespace arbblock {
namespace {

struct RaisedSet {
  NodeSet nodes;
  Cost dual;
};

// Outcome of the primal-dual scheme: duals on a laminar family of raised
// sets (every non-root singleton first, then larger sets in raising order)
// and the reduced cost of every arc, indexed like graph.arcs(). Arcs
// entering the root are excluded and carry no reduced cost.
struct DualSolution {
  std::vector<RaisedSet> raised;
  std::vector<Cost> reduced;
  std::vector<char> usable;
};

// Strongly connected components of the subgraph formed by `active` arcs.
// Returns the component index of every node.
std::vector<int> Components(const Digraph& graph,
                            const std::vector<char>& active, int* count) {
  const int n = graph.node_count();
  std::vector<std::vector<NodeId>> out(n);
  std::vector<std::vector<NodeId>> in(n);
  for (std::size_t i = 0; i < graph.arc_count(); ++i) {
    if (!active[i]) continue;
    const Arc& a = graph.arcs()[i];
    out[a.tail].push_back(a.head);
    in[a.head].push_back(a.tail);
  }
  // Kosaraju: finishing order on the graph, then sweep the reverse graph.
  std::vector<NodeId> order;
  std::vector<char> seen(n, 0);
  for (NodeId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::pair<NodeId, std::size_t>> stack = {{start, 0}};
    seen[start] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < out[v].size()) {
        NodeId w = out[v][next++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<int> component(n, -1);
  int c = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (component[*it] >= 0) continue;
    std::vector<NodeId> stack = {*it};
    component[*it] = c;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (NodeId w : in[v]) {
        if (component[w] < 0) {
          component[w] = c;
          stack.push_back(w);
        }
      }
    }
    ++c;
  }
  *count = c;
  return component;
}

DualSolution SolveDual(const Digraph& graph, const ArcAttribute& cost,
                       NodeId root) {
  const int n = graph.node_count();
  if (root < 0 || root >= n) {
    Fail(ErrorCode::kInvalidArgument,
         "root " + std::to_string(root) + " out of range");
  }
  if (!cost.Covers(graph)) {
    Fail(ErrorCode::kInvalidArgument, "cost is not defined on every arc");
  }
  const std::size_t m = graph.arc_count();
  DualSolution sol;
  sol.reduced.assign(m, 0);
  sol.usable.assign(m, 0);

  std::vector<char> has_entering(n, 0);
  std::vector<Cost> cheapest(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const Arc& a = graph.arcs()[i];
    if (a.head == root) continue;
    sol.usable[i] = 1;
    Cost c = cost[a.id];
    if (!has_entering[a.head] || c < cheapest[a.head]) cheapest[a.head] = c;
    has_entering[a.head] = 1;
  }
  for (NodeId v = 0; v < n; ++v) {
    if (v == root) continue;
    if (!has_entering[v]) {
      Fail(ErrorCode::kNoArborescence,
           "node " + std::to_string(v) + " has no entering arc");
    }
    sol.raised.push_back({{v}, cheapest[v]});
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!sol.usable[i]) continue;
    const Arc& a = graph.arcs()[i];
    sol.reduced[i] = cost[a.id] - cheapest[a.head];
  }

  // Raise a source component of the zero-reduced-cost subgraph until the
  // root reaches everything through tight arcs.
  while (true) {
    std::vector<char> tight(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      tight[i] = sol.usable[i] && sol.reduced[i] == 0;
    }
    int count = 0;
    std::vector<int> component = Components(graph, tight, &count);
    std::vector<char> entered(count, 0);
    for (std::size_t i = 0; i < m; ++i) {
      const Arc& a = graph.arcs()[i];
      if (tight[i] && component[a.tail] != component[a.head]) {
        entered[component[a.head]] = 1;
      }
    }
    int chosen = -1;
    for (NodeId v = 0; v < n && chosen < 0; ++v) {
      int c = component[v];
      if (!entered[c] && c != component[root]) chosen = c;
    }
    if (chosen < 0) break;

    NodeSet nodes;
    for (NodeId v = 0; v < n; ++v) {
      if (component[v] == chosen) nodes.push_back(v);
    }
    Cost raise = 0;
    bool any = false;
    for (std::size_t i = 0; i < m; ++i) {
      const Arc& a = graph.arcs()[i];
      if (!sol.usable[i]) continue;
      if (component[a.head] == chosen && component[a.tail] != chosen) {
        if (!any || sol.reduced[i] < raise) raise = sol.reduced[i];
        any = true;
      }
    }
    if (!any) {
      Fail(ErrorCode::kNoArborescence,
           "a set of " + std::to_string(nodes.size()) +
               " nodes cannot be reached from the root");
    }
    for (std::size_t i = 0; i < m; ++i) {
      const Arc& a = graph.arcs()[i];
      if (sol.usable[i] && component[a.head] == chosen &&
          component[a.tail] != chosen) {
        sol.reduced[i] -= raise;
      }
    }
    sol.raised.push_back({std::move(nodes), raise});
  }
  return sol;
}

// Builds an arborescence from tight arcs that enters every raised set
// exactly once: contract the maximal raised sets, take a BFS tree from the
// entry node, then recurse into each set from the node its tree arc hits.
Arborescence ExtractPrimal(const Digraph& graph, NodeId root,
                           const DualSolution& sol) {
  const int n = graph.node_count();
  // Tree over raised sets; index raised.size() is the whole node set.
  const int top = static_cast<int>(sol.raised.size());
  std::vector<int> parent(sol.raised.size(), top);
  std::vector<std::vector<char>> member;
  member.reserve(sol.raised.size());
  for (const RaisedSet& r : sol.raised) member.push_back(Membership(r.nodes, n));
  for (std::size_t i = 0; i < sol.raised.size(); ++i) {
    std::size_t best_size = static_cast<std::size_t>(n) + 1;
    for (std::size_t j = 0; j < sol.raised.size(); ++j) {
      const NodeSet& inner = sol.raised[i].nodes;
      const NodeSet& outer = sol.raised[j].nodes;
      if (outer.size() <= inner.size() || outer.size() >= best_size) continue;
      if (member[j][inner.front()]) {
        parent[i] = static_cast<int>(j);
        best_size = outer.size();
      }
    }
  }
  std::vector<std::vector<int>> children(sol.raised.size() + 1);
  for (std::size_t i = 0; i < sol.raised.size(); ++i) {
    children[parent[i]].push_back(static_cast<int>(i));
  }

  std::vector<std::size_t> by_id(graph.arc_count());
  std::iota(by_id.begin(), by_id.end(), 0);
  std::sort(by_id.begin(), by_id.end(), [&](std::size_t x, std::size_t y) {
    return graph.arcs()[x].id < graph.arcs()[y].id;
  });

  std::vector<ArcId> chosen;
  std::vector<int> child_of(n, -1);
  // (level, entry node) pairs still to expand.
  std::vector<std::pair<int, NodeId>> work = {{top, root}};
  while (!work.empty()) {
    auto [level, entry] = work.back();
    work.pop_back();
    const std::vector<int>& kids = children[level];
    if (kids.empty()) continue;
    std::fill(child_of.begin(), child_of.end(), -1);
    // Child slots: kids by index, plus the root as its own slot at the top.
    const int slots = static_cast<int>(kids.size()) + (level == top ? 1 : 0);
    for (std::size_t k = 0; k < kids.size(); ++k) {
      for (NodeId v : sol.raised[kids[k]].nodes) child_of[v] = static_cast<int>(k);
    }
    if (level == top) child_of[root] = static_cast<int>(kids.size());

    std::vector<NodeId> entry_of(slots, -1);
    std::vector<int> queue = {child_of[entry]};
    entry_of[child_of[entry]] = entry;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int from = queue[head];
      for (std::size_t idx : by_id) {
        if (!sol.usable[idx] || sol.reduced[idx] != 0) continue;
        const Arc& a = graph.arcs()[idx];
        if (child_of[a.tail] != from) continue;
        int to = child_of[a.head];
        if (to < 0 || to == from || entry_of[to] >= 0) continue;
        entry_of[to] = a.head;
        chosen.push_back(a.id);
        queue.push_back(to);
      }
    }
    if (static_cast<int>(queue.size()) != slots) {
      Fail(ErrorCode::kNoArborescence,
           "tight arcs do not connect a contracted level");
    }
    for (std::size_t k = 0; k < kids.size(); ++k) {
      work.push_back({kids[k], entry_of[k]});
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return {root, std::move(chosen)};
}

std::vector<char> Reachable(const std::vector<std::vector<NodeId>>& out,
                            NodeId from) {
  std::vector<char> seen(out.size(), 0);
  std::vector<NodeId> stack = {from};
  seen[from] = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : out[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool IsSpanningArborescence(const Digraph& graph, NodeId root,
                            std::span<const ArcId> arcs) {
  const int n = graph.node_count();
  if (root < 0 || root >= n) return false;
  if (arcs.size() != static_cast<std::size_t>(n - 1)) return false;
  std::vector<NodeId> parent(n, -1);
  std::vector<ArcId> sorted(arcs.begin(), arcs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  for (ArcId id : arcs) {
    if (!graph.HasArc(id)) return false;
    const Arc& a = graph.arc(id);
    if (a.head == root || parent[a.head] >= 0) return false;
    parent[a.head] = a.tail;
  }
  // Every node must climb to the root within n steps.
  for (NodeId v = 0; v < n; ++v) {
    NodeId x = v;
    int steps = 0;
    while (x != root && steps <= n) {
      x = parent[x];
      if (x < 0) return false;
      ++steps;
    }
    if (x != root) return false;
  }
  return true;
}

CostedArborescence MinCostArborescence(const Digraph& graph,
                                       const ArcAttribute& cost, NodeId root) {
  DualSolution sol = SolveDual(graph, cost, root);
  CostedArborescence out;
  out.arborescence = ExtractPrimal(graph, root, sol);
  for (ArcId id : out.arborescence.arcs) out.cost += cost[id];
  return out;
}

TightStructure ComputeTightStructure(const Digraph& graph,
                                     const ArcAttribute& cost, NodeId root) {
  DualSolution sol = SolveDual(graph, cost, root);
  TightStructure ts;
  ts.root = root;
  for (std::size_t i = 0; i < graph.arc_count(); ++i) {
    if (sol.usable[i] && sol.reduced[i] == 0) {
      ts.tight_arcs.push_back(graph.arcs()[i].id);
    }
  }
  std::sort(ts.tight_arcs.begin(), ts.tight_arcs.end());
  ts.head_offset.assign(graph.node_count(), 0);
  std::vector<RaisedSet> positive;
  for (const RaisedSet& r : sol.raised) {
    if (r.dual > 0) {
      positive.push_back(r);
    } else {
      // Only singletons can carry a non-positive dual.
      ts.head_offset[r.nodes.front()] = r.dual;
    }
  }
  std::vector<NodeSet> sets;
  for (const RaisedSet& r : positive) sets.push_back(r.nodes);
  ts.laminar = LaminarFamily(graph.node_count(), std::move(sets));
  ts.duals.resize(positive.size());
  for (const RaisedSet& r : positive) {
    auto it = std::lower_bound(ts.laminar.sets().begin(),
                               ts.laminar.sets().end(), r.nodes, CanonicalLess);
    ts.duals[it - ts.laminar.sets().begin()] = r.dual;
  }
  return ts;
}

bool IsLTightByEntering(const Digraph& graph, const LaminarFamily& laminar,
                        const Arborescence& arborescence) {
  for (std::size_t f = 0; f < laminar.size(); ++f) {
    int entering = 0;
    for (ArcId id : arborescence.arcs) {
      const Arc& a = graph.arc(id);
      if (laminar.Contains(f, a.head) && !laminar.Contains(f, a.tail)) {
        ++entering;
      }
    }
    if (entering > 1) return false;
    if (laminar.Contains(f, arborescence.root) && entering != 0) return false;
  }
  return true;
}

bool IsLTightByRestriction(const Digraph& graph, const LaminarFamily& laminar,
                           const Arborescence& arborescence) {
  std::vector<char> has_parent_inside(graph.node_count(), 0);
  for (std::size_t f = 0; f < laminar.size(); ++f) {
    std::fill(has_parent_inside.begin(), has_parent_inside.end(), 0);
    for (ArcId id : arborescence.arcs) {
      const Arc& a = graph.arc(id);
      if (laminar.Contains(f, a.head) && laminar.Contains(f, a.tail)) {
        has_parent_inside[a.head] = 1;
      }
    }
    // B[F] is an arborescence iff exactly one node of F lacks a parent in
    // F (B itself is acyclic with in-degree at most one).
    int roots = 0;
    for (NodeId v : laminar[f]) roots += has_parent_inside[v] ? 0 : 1;
    if (roots != 1) return false;
  }
  return true;
}

bool IsLTight(const Digraph& graph, const LaminarFamily& laminar,
              const Arborescence& arborescence) {
  bool by_entering = IsLTightByEntering(graph, laminar, arborescence);
  bool by_restriction = IsLTightByRestriction(graph, laminar, arborescence);
  if (by_entering != by_restriction) {
    Fail(ErrorCode::kInvalidArgument,
         "L-tightness characterisations disagree; is the input a spanning "
         "arborescence?");
  }
  return by_entering;
}

std::optional<Arborescence> FindLTight(const Digraph& graph,
                                       const LaminarFamily& laminar,
                                       std::optional<NodeId> root) {
  if (graph.node_count() == 0) return std::nullopt;
  ArcId max_id = -1;
  for (const Arc& a : graph.arcs()) max_id = std::max(max_id, a.id);
  std::vector<Cost> entered(static_cast<std::size_t>(max_id + 1), 0);
  for (const Arc& a : graph.arcs()) {
    for (std::size_t f = 0; f < laminar.size(); ++f) {
      if (laminar.Contains(f, a.head) && !laminar.Contains(f, a.tail)) {
        ++entered[a.id];
      }
    }
  }
  ArcAttribute entering_count(std::move(entered));
  NodeSet roots = RootSet(graph);
  for (NodeId r : roots) {
    if (root && *root != r) continue;
    Cost lower_bound = 0;
    for (std::size_t f = 0; f < laminar.size(); ++f) {
      if (!laminar.Contains(f, r)) ++lower_bound;
    }
    CostedArborescence best = MinCostArborescence(graph, entering_count, r);
    if (best.cost == lower_bound) return best.arborescence;
  }
  return std::nullopt;
}

NodeSet RootSet(const Digraph& graph) {
  const int n = graph.node_count();
  std::vector<std::vector<NodeId>> out(n);
  for (const Arc& a : graph.arcs()) out[a.tail].push_back(a.head);
  NodeSet roots;
  for (NodeId r = 0; r < n; ++r) {
    std::vector<char> seen = Reachable(out, r);
    if (std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; })) {
      roots.push_back(r);
    }
  }
  return roots;
}

}  // namespace arbblock
