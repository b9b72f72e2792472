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

#ifndef ARBBLOCK_LAMINAR_HPP_
#define ARBBLOCK_LAMINAR_HPP_

#include <span>
#include <vector>

#include "arbblock/graph.hpp"

namespace arbblock {

// Canonical set order: ascending size, ties broken lexicographically.
bool CanonicalLess(const NodeSet& a, const NodeSet& b);

// Laminar family of non-empty node subsets over 0..n-1. Members are stored
// in canonical order, so iterating yields every set before its supersets.
class LaminarFamily {
 public:
  LaminarFamily() = default;
  // Validates and canonicalises. Throws InvalidArgument on crossing pairs,
  // duplicates, empty sets or out-of-range nodes.
  LaminarFamily(int node_count, std::vector<NodeSet> sets);

  int node_count() const { return node_count_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const NodeSet& operator[](std::size_t i) const { return sets_[i]; }
  std::span<const NodeSet> sets() const { return sets_; }

  bool Contains(std::size_t member, NodeId v) const {
    return membership_[member][v] != 0;
  }
  bool HasMember(const NodeSet& set) const;

  // Returns a family with `set` added (no-op if already present).
  LaminarFamily With(const NodeSet& set) const;
  LaminarFamily WithFullSet() const;
  // Members lying inside the node set of `induced`, re-indexed onto its
  // local ids. `induced` must come from InducedSubgraph on this family's
  // ground graph.
  LaminarFamily Restrict(const Digraph& induced) const;

  friend bool operator==(const LaminarFamily& a, const LaminarFamily& b) {
    return a.node_count_ == b.node_count_ && a.sets_ == b.sets_;
  }

 private:
  int node_count_ = 0;
  std::vector<NodeSet> sets_;
  std::vector<std::vector<char>> membership_;
};

// Pairwise laminarity test, independent of the constructor's validation.
bool IsLaminarPair(const NodeSet& a, const NodeSet& b);

}  // namespace arbblock

#endif  // ARBBLOCK_LAMINAR_HPP_
