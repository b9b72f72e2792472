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

#ifndef ARBBLOCK_GRAPH_HPP_
#define ARBBLOCK_GRAPH_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace arbblock {

using NodeId = int;
using ArcId = int;
using Weight = std::int64_t;
using Cost = std::int64_t;

// Stands in for +infinity wherever a minimum ranges over an empty set.
inline constexpr Weight kInfiniteWeight = std::numeric_limits<Weight>::max();

// Sorted, duplicate-free list of node ids.
using NodeSet = std::vector<NodeId>;

struct Arc {
  ArcId id;
  NodeId tail;
  NodeId head;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Immutable digraph on dense node ids 0..n-1. Arcs carry stable ids that
// survive InducedSubgraph and RelocateTail; parallel arcs are allowed and
// self-loops are rejected. A graph derived through InducedSubgraph remembers
// the id every local node had in the graph it was cut from.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int node_count, std::vector<Arc> arcs);

  int node_count() const { return node_count_; }
  std::size_t arc_count() const { return arcs_.size(); }
  std::span<const Arc> arcs() const { return arcs_; }

  bool HasArc(ArcId id) const { return index_.contains(id); }
  // Throws InvalidArgument if the id is unknown.
  const Arc& arc(ArcId id) const;

  // parent_node(v) is v's id in the graph this one was induced from (the
  // identity for graphs built directly).
  NodeId parent_node(NodeId v) const { return parent_[v]; }
  std::span<const NodeId> parent_nodes() const { return parent_; }

  // Maps a node set of the parent graph to local ids; nodes not present
  // are dropped.
  NodeSet FromParent(std::span<const NodeId> parent_set) const;
  NodeSet ToParent(std::span<const NodeId> local_set) const;

  // Sorted ids of all arcs.
  std::vector<ArcId> ArcIds() const;

  // Same nodes and parent mapping with a different arc list.
  Digraph WithArcs(std::vector<Arc> arcs) const;

 private:
  friend Digraph InducedSubgraph(const Digraph& graph,
                                 std::span<const NodeId> nodes);

  int node_count_ = 0;
  std::vector<Arc> arcs_;
  std::unordered_map<ArcId, std::size_t> index_;
  std::vector<NodeId> parent_;
};

// Per-arc value keyed by arc id. Used for costs (any sign) and for weights
// (non-negative).
class ArcAttribute {
 public:
  ArcAttribute() = default;
  explicit ArcAttribute(std::vector<std::int64_t> values)
      : values_(std::move(values)) {}

  // Same value on every id in [0, size).
  static ArcAttribute Uniform(std::size_t size, std::int64_t value) {
    return ArcAttribute(std::vector<std::int64_t>(size, value));
  }

  std::int64_t operator[](ArcId id) const { return values_[id]; }
  std::size_t size() const { return values_.size(); }
  std::span<const std::int64_t> values() const { return values_; }

  bool Covers(const Digraph& graph) const;
  bool IsNonNegative() const;

 private:
  std::vector<std::int64_t> values_;
};

// Returns true iff `nodes` is sorted, duplicate free and within range.
bool IsNodeSet(std::span<const NodeId> nodes, int node_count);
NodeSet MakeNodeSet(std::vector<NodeId> nodes);
std::vector<char> Membership(std::span<const NodeId> nodes, int node_count);

Digraph InducedSubgraph(const Digraph& graph, std::span<const NodeId> nodes);
Digraph RelocateTail(const Digraph& graph, ArcId arc, NodeId new_tail);
// Removes every arc whose id is listed.
Digraph DeleteArcs(const Digraph& graph, std::span<const ArcId> arcs);
Digraph KeepArcs(const Digraph& graph, std::span<const ArcId> arcs);

Weight WeightedIndegree(const Digraph& graph, const ArcAttribute& weight,
                        std::span<const NodeId> nodes);
Weight TotalWeight(const Digraph& graph, const ArcAttribute& weight);

std::vector<ArcId> EnteringArcs(const Digraph& graph,
                                std::span<const NodeId> nodes);

}  // namespace arbblock

#endif  // ARBBLOCK_GRAPH_HPP_
