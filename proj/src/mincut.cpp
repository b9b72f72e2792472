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

#include "arbblock/mincut.hpp"

#include <algorithm>
#include <string>

#include "arbblock/error.hpp"
#include "arbblock/maxflow.hpp"

namespace arbblock {
namespace {

void RequireNode(const Digraph& graph, NodeId v, const char* what) {
  if (v < 0 || v >= graph.node_count()) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(what) + " node " + std::to_string(v) + " out of range");
  }
}

void Count(CutStats* stats) {
  if (stats != nullptr) {
    stats->min_cut_calls.fetch_add(1, std::memory_order_relaxed);
  }
}

FlowNetwork MakeNetwork(const Digraph& graph, const ArcAttribute& weight) {
  FlowNetwork network(graph.node_count());
  for (const Arc& a : graph.arcs()) {
    network.AddArc(a.tail, a.head, weight[a.id]);
  }
  return network;
}

}  // namespace

CutResult MinStCut(const Digraph& graph, const ArcAttribute& weight, NodeId s,
                   NodeId t, CutStats* stats) {
  RequireNode(graph, s, "source");
  RequireNode(graph, t, "sink");
  if (s == t) {
    Fail(ErrorCode::kInvalidArgument, "minimum cut with s equal to t");
  }
  FlowNetwork network = MakeNetwork(graph, weight);
  Count(stats);
  CutResult result;
  result.value = network.MaxFlow(s, t);
  result.source_side = network.SourceSide(s);
  return result;
}

RootedCut MinRootedCutAvoiding(const Digraph& graph, const ArcAttribute& weight,
                               NodeId t, CutStats* stats) {
  if (graph.node_count() < 2) {
    Fail(ErrorCode::kInvalidArgument,
         "rooted cut needs a graph with at least two nodes");
  }
  RequireNode(graph, t, "avoided");
  FlowNetwork network = MakeNetwork(graph, weight);
  RootedCut best{kInfiniteWeight, {}};
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    if (v == t) continue;
    Count(stats);
    Weight value = network.MaxFlow(t, v, best.value);
    if (value < best.value) {
      best.value = value;
      best.z = network.SinkSide(v);
    }
  }
  return best;
}

NodeId AnchorNode(const Digraph& graph, const ArcAttribute& weight,
                  CutStats* stats) {
  if (graph.node_count() == 0) {
    Fail(ErrorCode::kInvalidArgument, "anchor node of an empty graph");
  }
  if (graph.node_count() == 1) return 0;
  FlowNetwork network = MakeNetwork(graph, weight);
  NodeId anchor = -1;
  Weight anchor_value = -1;
  for (NodeId t = 0; t < graph.node_count(); ++t) {
    // The inner minimum only matters while it can still beat the incumbent.
    Weight inner = kInfiniteWeight;
    for (NodeId v = 0; v < graph.node_count() && inner > anchor_value; ++v) {
      if (v == t) continue;
      Count(stats);
      inner = std::min(inner, network.MaxFlow(t, v, inner));
    }
    if (inner > anchor_value) {
      anchor = t;
      anchor_value = inner;
    }
  }
  return anchor;
}

DoubleCutAux BuildDoubleCutAux(const Digraph& graph,
                               const ArcAttribute& weight) {
  const int n = graph.node_count();
  if (n < 2) {
    Fail(ErrorCode::kInvalidArgument,
         "double cut auxiliary graph needs at least two nodes");
  }
  DoubleCutAux aux;
  aux.infinite_weight = TotalWeight(graph, weight) + 1;
  std::vector<Arc> arcs;
  std::vector<std::int64_t> weights;
  arcs.reserve(2 * graph.arc_count() + n);
  for (const Arc& a : graph.arcs()) {
    ArcId id = static_cast<ArcId>(arcs.size());
    arcs.push_back({id, a.head, a.tail});
    arcs.push_back({id + 1, n + a.tail, n + a.head});
    weights.push_back(weight[a.id]);
    weights.push_back(weight[a.id]);
    aux.provenance.push_back(a.id);
    aux.provenance.push_back(a.id);
  }
  for (NodeId v = 0; v < n; ++v) {
    arcs.push_back({static_cast<ArcId>(arcs.size()), v, n + v});
    weights.push_back(aux.infinite_weight);
    aux.provenance.push_back(-1);
  }
  aux.graph = Digraph(2 * n, std::move(arcs));
  aux.weight = ArcAttribute(std::move(weights));
  return aux;
}

DoubleCut MinDoubleCut(const Digraph& graph, const ArcAttribute& weight,
                       std::optional<NodeId> fixed_source, Weight bound,
                       CutStats* stats) {
  const int n = graph.node_count();
  if (n < 2) return {};
  if (fixed_source) RequireNode(graph, *fixed_source, "fixed source");
  DoubleCutAux aux = BuildDoubleCutAux(graph, weight);
  FlowNetwork network = MakeNetwork(aux.graph, aux.weight);

  DoubleCut best;
  Weight limit = bound;
  NodeSet best_side;
  NodeId s_begin = fixed_source ? *fixed_source : 0;
  NodeId s_end = fixed_source ? *fixed_source + 1 : n;
  for (NodeId s = s_begin; s < s_end; ++s) {
    for (NodeId t = 0; t < n; ++t) {
      if (t == s) continue;
      Count(stats);
      Weight value = network.MaxFlow(s, n + t, limit);
      if (value < limit) {
        limit = value;
        best.value = value;
        best_side = network.SourceSide(s);
      }
    }
  }
  if (!best.finite()) return best;
  std::vector<char> in_side = Membership(best_side, 2 * n);
  for (NodeId v = 0; v < n; ++v) {
    if (in_side[v]) best.z1.push_back(v);
    if (!in_side[n + v]) best.z2.push_back(v);
  }
  return best;
}

}  // namespace arbblock
