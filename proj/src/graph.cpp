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

#include "arbblock/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "arbblock/error.hpp"

namespace arbblock {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kNoArborescence:
      return "NoArborescence";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kResourceLimit:
      return "ResourceLimit";
  }
  return "Unknown";
}

Digraph::Digraph(int node_count, std::vector<Arc> arcs)
    : node_count_(node_count), arcs_(std::move(arcs)) {
  if (node_count < 0) {
    Fail(ErrorCode::kInvalidArgument, "negative node count");
  }
  index_.reserve(arcs_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.id < 0) {
      Fail(ErrorCode::kInvalidArgument,
           "arc id " + std::to_string(a.id) + " is negative");
    }
    if (a.tail < 0 || a.tail >= node_count || a.head < 0 ||
        a.head >= node_count) {
      Fail(ErrorCode::kInvalidArgument,
           "arc " + std::to_string(a.id) + " has an endpoint out of range");
    }
    if (a.tail == a.head) {
      Fail(ErrorCode::kInvalidArgument,
           "arc " + std::to_string(a.id) + " is a self-loop");
    }
    if (!index_.emplace(a.id, i).second) {
      Fail(ErrorCode::kInvalidArgument,
           "duplicate arc id " + std::to_string(a.id));
    }
  }
  parent_.resize(node_count);
  std::iota(parent_.begin(), parent_.end(), 0);
}

const Arc& Digraph::arc(ArcId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    Fail(ErrorCode::kInvalidArgument, "unknown arc id " + std::to_string(id));
  }
  return arcs_[it->second];
}

NodeSet Digraph::FromParent(std::span<const NodeId> parent_set) const {
  NodeSet local;
  for (NodeId p : parent_set) {
    auto it = std::lower_bound(parent_.begin(), parent_.end(), p);
    if (it != parent_.end() && *it == p) {
      local.push_back(static_cast<NodeId>(it - parent_.begin()));
    }
  }
  std::sort(local.begin(), local.end());
  return local;
}

NodeSet Digraph::ToParent(std::span<const NodeId> local_set) const {
  NodeSet out;
  out.reserve(local_set.size());
  for (NodeId v : local_set) out.push_back(parent_[v]);
  std::sort(out.begin(), out.end());
  return out;
}

Digraph Digraph::WithArcs(std::vector<Arc> arcs) const {
  Digraph out(node_count_, std::move(arcs));
  out.parent_ = parent_;
  return out;
}

std::vector<ArcId> Digraph::ArcIds() const {
  std::vector<ArcId> ids;
  ids.reserve(arcs_.size());
  for (const Arc& a : arcs_) ids.push_back(a.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool ArcAttribute::Covers(const Digraph& graph) const {
  return std::all_of(graph.arcs().begin(), graph.arcs().end(),
                     [&](const Arc& a) {
                       return static_cast<std::size_t>(a.id) < values_.size();
                     });
}

bool ArcAttribute::IsNonNegative() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](std::int64_t v) { return v >= 0; });
}

bool IsNodeSet(std::span<const NodeId> nodes, int node_count) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] < 0 || nodes[i] >= node_count) return false;
    if (i > 0 && nodes[i - 1] >= nodes[i]) return false;
  }
  return true;
}

NodeSet MakeNodeSet(std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

std::vector<char> Membership(std::span<const NodeId> nodes, int node_count) {
  std::vector<char> in(node_count, 0);
  for (NodeId v : nodes) in[v] = 1;
  return in;
}

namespace {

void RequireNodeSet(std::span<const NodeId> nodes, int node_count) {
  if (!IsNodeSet(nodes, node_count)) {
    Fail(ErrorCode::kInvalidArgument,
         "node set must be sorted, duplicate free and in range");
  }
}

}  // namespace

Digraph InducedSubgraph(const Digraph& graph, std::span<const NodeId> nodes) {
  if (nodes.empty()) {
    Fail(ErrorCode::kInvalidArgument, "induced subgraph of an empty set");
  }
  RequireNodeSet(nodes, graph.node_count());
  std::vector<NodeId> local(graph.node_count(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    local[nodes[i]] = static_cast<NodeId>(i);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : graph.arcs()) {
    if (local[a.tail] >= 0 && local[a.head] >= 0) {
      arcs.push_back({a.id, local[a.tail], local[a.head]});
    }
  }
  Digraph sub(static_cast<int>(nodes.size()), std::move(arcs));
  sub.parent_.assign(nodes.begin(), nodes.end());
  return sub;
}

Digraph RelocateTail(const Digraph& graph, ArcId arc, NodeId new_tail) {
  const Arc& target = graph.arc(arc);
  if (new_tail < 0 || new_tail >= graph.node_count()) {
    Fail(ErrorCode::kInvalidArgument, "relocation target out of range");
  }
  if (new_tail == target.head) {
    Fail(ErrorCode::kInvalidArgument,
         "relocating arc " + std::to_string(arc) + " would create a self-loop");
  }
  std::vector<Arc> arcs(graph.arcs().begin(), graph.arcs().end());
  for (Arc& a : arcs) {
    if (a.id == arc) a.tail = new_tail;
  }
  return graph.WithArcs(std::move(arcs));
}

Digraph DeleteArcs(const Digraph& graph, std::span<const ArcId> arcs) {
  std::unordered_set<ArcId> drop(arcs.begin(), arcs.end());
  std::vector<Arc> kept;
  for (const Arc& a : graph.arcs()) {
    if (!drop.contains(a.id)) kept.push_back(a);
  }
  return graph.WithArcs(std::move(kept));
}

Digraph KeepArcs(const Digraph& graph, std::span<const ArcId> arcs) {
  std::unordered_set<ArcId> keep(arcs.begin(), arcs.end());
  std::vector<Arc> kept;
  for (const Arc& a : graph.arcs()) {
    if (keep.contains(a.id)) kept.push_back(a);
  }
  return graph.WithArcs(std::move(kept));
}

Weight WeightedIndegree(const Digraph& graph, const ArcAttribute& weight,
                        std::span<const NodeId> nodes) {
  RequireNodeSet(nodes, graph.node_count());
  std::vector<char> in = Membership(nodes, graph.node_count());
  Weight total = 0;
  for (const Arc& a : graph.arcs()) {
    if (in[a.head] && !in[a.tail]) total += weight[a.id];
  }
  return total;
}

Weight TotalWeight(const Digraph& graph, const ArcAttribute& weight) {
  Weight total = 0;
  for (const Arc& a : graph.arcs()) total += weight[a.id];
  return total;
}

std::vector<ArcId> EnteringArcs(const Digraph& graph,
                                std::span<const NodeId> nodes) {
  RequireNodeSet(nodes, graph.node_count());
  std::vector<char> in = Membership(nodes, graph.node_count());
  std::vector<ArcId> out;
  for (const Arc& a : graph.arcs()) {
    if (in[a.head] && !in[a.tail]) out.push_back(a.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace arbblock
