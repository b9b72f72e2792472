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

#include "arbblock/laminar.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "arbblock/error.hpp"

namespace arbblock {

bool CanonicalLess(const NodeSet& a, const NodeSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool IsLaminarPair(const NodeSet& a, const NodeSet& b) {
  std::vector<NodeId> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  return common.empty() || common.size() == a.size() ||
         common.size() == b.size();
}

LaminarFamily::LaminarFamily(int node_count, std::vector<NodeSet> sets)
    : node_count_(node_count), sets_(std::move(sets)) {
  for (NodeSet& s : sets_) {
    s = MakeNodeSet(std::move(s));
    if (s.empty()) {
      Fail(ErrorCode::kInvalidArgument, "laminar family member is empty");
    }
    if (s.front() < 0 || s.back() >= node_count) {
      Fail(ErrorCode::kInvalidArgument,
           "laminar family member has a node out of range");
    }
  }
  std::sort(sets_.begin(), sets_.end(), CanonicalLess);
  for (std::size_t i = 1; i < sets_.size(); ++i) {
    if (sets_[i] == sets_[i - 1]) {
      Fail(ErrorCode::kInvalidArgument, "duplicate laminar family member");
    }
  }
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    for (std::size_t j = i + 1; j < sets_.size(); ++j) {
      if (!IsLaminarPair(sets_[i], sets_[j])) {
        Fail(ErrorCode::kInvalidArgument,
             "laminar family members " + std::to_string(i) + " and " +
                 std::to_string(j) + " cross");
      }
    }
  }
  membership_.reserve(sets_.size());
  for (const NodeSet& s : sets_) {
    membership_.push_back(Membership(s, node_count_));
  }
}

bool LaminarFamily::HasMember(const NodeSet& set) const {
  return std::binary_search(sets_.begin(), sets_.end(), set, CanonicalLess);
}

LaminarFamily LaminarFamily::With(const NodeSet& set) const {
  if (HasMember(set)) return *this;
  std::vector<NodeSet> sets = sets_;
  sets.push_back(set);
  return LaminarFamily(node_count_, std::move(sets));
}

LaminarFamily LaminarFamily::WithFullSet() const {
  NodeSet all(node_count_);
  std::iota(all.begin(), all.end(), 0);
  return With(all);
}

LaminarFamily LaminarFamily::Restrict(const Digraph& induced) const {
  std::vector<char> inside(node_count_, 0);
  for (NodeId p : induced.parent_nodes()) inside[p] = 1;
  std::vector<NodeSet> kept;
  for (const NodeSet& s : sets_) {
    if (std::all_of(s.begin(), s.end(), [&](NodeId v) { return inside[v]; })) {
      kept.push_back(induced.FromParent(s));
    }
  }
  return LaminarFamily(induced.node_count(), std::move(kept));
}

}  // namespace arbblock
