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

#include "arbblock/maxflow.hpp"

#include <algorithm>

#include "arbblock/error.hpp"

namespace arbblock {

FlowNetwork::FlowNetwork(int node_count)
    : first_out_(node_count, -1), level_(node_count), cursor_(node_count) {
  queue_.reserve(node_count);
}

void FlowNetwork::AddArc(NodeId from, NodeId to, Weight capacity) {
  if (capacity < 0) {
    Fail(ErrorCode::kInvalidArgument, "negative capacity");
  }
  edges_.push_back({to, capacity, first_out_[from]});
  first_out_[from] = static_cast<int>(edges_.size()) - 1;
  capacity_.push_back(capacity);
  // Reverse residual edge lives at index ^ 1.
  edges_.push_back({from, 0, first_out_[to]});
  first_out_[to] = static_cast<int>(edges_.size()) - 1;
  capacity_.push_back(0);
}

bool FlowNetwork::BuildLevels(NodeId source, NodeId sink) {
  std::fill(level_.begin(), level_.end(), -1);
  queue_.clear();
  queue_.push_back(source);
  level_[source] = 0;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    NodeId v = queue_[head];
    for (int e = first_out_[v]; e >= 0; e = edges_[e].next) {
      const Edge& edge = edges_[e];
      if (edge.residual > 0 && level_[edge.to] < 0) {
        level_[edge.to] = level_[v] + 1;
        queue_.push_back(edge.to);
      }
    }
  }
  return level_[sink] >= 0;
}

Weight FlowNetwork::Push(NodeId v, NodeId sink, Weight pushed) {
  if (v == sink) return pushed;
  for (int& e = cursor_[v]; e >= 0; e = edges_[e].next) {
    Edge& edge = edges_[e];
    if (edge.residual <= 0 || level_[edge.to] != level_[v] + 1) continue;
    Weight got = Push(edge.to, sink, std::min(pushed, edge.residual));
    if (got > 0) {
      edge.residual -= got;
      edges_[e ^ 1].residual += got;
      return got;
    }
  }
  return 0;
}

Weight FlowNetwork::MaxFlow(NodeId source, NodeId sink, Weight limit) {
  if (source == sink) {
    Fail(ErrorCode::kInvalidArgument, "max flow with source equal to sink");
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    edges_[e].residual = capacity_[e];
  }
  Weight flow = 0;
  while (flow < limit && BuildLevels(source, sink)) {
    std::copy(first_out_.begin(), first_out_.end(), cursor_.begin());
    while (flow < limit) {
      Weight got = Push(source, sink, limit - flow);
      if (got == 0) break;
      flow += got;
    }
  }
  return flow;
}

NodeSet FlowNetwork::SourceSide(NodeId source) const {
  std::vector<char> seen(first_out_.size(), 0);
  std::vector<NodeId> stack = {source};
  seen[source] = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (int e = first_out_[v]; e >= 0; e = edges_[e].next) {
      if (edges_[e].residual > 0 && !seen[edges_[e].to]) {
        seen[edges_[e].to] = 1;
        stack.push_back(edges_[e].to);
      }
    }
  }
  NodeSet side;
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (seen[v]) side.push_back(static_cast<NodeId>(v));
  }
  return side;
}

NodeSet FlowNetwork::SinkSide(NodeId sink) const {
  // u reaches v in the residual network iff the edge u->v (index e) has
  // residual capacity; scanning v's list gives the reverse edges e ^ 1.
  std::vector<char> seen(first_out_.size(), 0);
  std::vector<NodeId> stack = {sink};
  seen[sink] = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (int e = first_out_[v]; e >= 0; e = edges_[e].next) {
      NodeId u = edges_[e].to;
      if (edges_[e ^ 1].residual > 0 && !seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  NodeSet side;
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (seen[v]) side.push_back(static_cast<NodeId>(v));
  }
  return side;
}

}  // namespace arbblock
