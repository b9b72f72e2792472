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

#ifndef ARBBLOCK_MAXFLOW_HPP_
#define ARBBLOCK_MAXFLOW_HPP_

#include <cstdint>
#include <vector>

#include "arbblock/graph.hpp"

namespace arbblock {

// Dinic max-flow on integer capacities. The network is built once and can
// answer any number of (source, sink) queries; every query starts from zero
// flow.
class FlowNetwork {
 public:
  explicit FlowNetwork(int node_count);

  int node_count() const { return static_cast<int>(first_out_.size()); }
  void AddArc(NodeId from, NodeId to, Weight capacity);

  // Returns the maximum flow value, or stops as soon as the flow reaches
  // `limit` and returns a value >= limit. The residual state of the last
  // query stays available to SourceSide/SinkSide.
  Weight MaxFlow(NodeId source, NodeId sink, Weight limit = kInfiniteWeight);

  // Nodes reachable from `source` in the residual network: the unique
  // inclusion-minimal source side of a minimum cut.
  NodeSet SourceSide(NodeId source) const;
  // Nodes that reach `sink` in the residual network: the minimal sink side.
  NodeSet SinkSide(NodeId sink) const;

 private:
  struct Edge {
    NodeId to;
    Weight residual;
    int next;
  };

  bool BuildLevels(NodeId source, NodeId sink);
  Weight Push(NodeId v, NodeId sink, Weight pushed);

  std::vector<Edge> edges_;
  std::vector<Weight> capacity_;
  std::vector<int> first_out_;
  std::vector<int> level_;
  std::vector<int> cursor_;
  std::vector<NodeId> queue_;
};

}  // namespace arbblock

#endif  // ARBBLOCK_MAXFLOW_HPP_
