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

#ifndef ARBBLOCK_INSTANCE_HPP_
#define ARBBLOCK_INSTANCE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arbblock/graph.hpp"
#include "arbblock/laminar.hpp"

namespace arbblock {

enum class Problem { kMinArb, kBlocker, kTightBlocker };

const char* ProblemName(Problem problem);
// Throws InvalidArgument for unknown names.
Problem ParseProblem(std::string_view name);

struct InstanceArc {
  std::string id;
  int tail = 0;
  int head = 0;
  Cost cost = 0;
  Weight weight = 1;

  friend bool operator==(const InstanceArc&, const InstanceArc&) = default;
};

// A problem instance as stored on disk: labelled nodes, arcs with explicit
// ids, and the optional root and laminar family. Node references are
// indices into `nodes`.
struct Instance {
  std::vector<std::string> nodes;
  std::vector<InstanceArc> arcs;
  std::optional<int> root;
  std::optional<std::vector<NodeSet>> laminar;
  Problem problem = Problem::kBlocker;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Input limits that keep every intermediate sum inside 64 bits.
inline constexpr std::int64_t kMaxAbsCost = std::int64_t{1} << 40;
inline constexpr std::int64_t kMaxTotalAbsCost = std::int64_t{1} << 50;
inline constexpr std::int64_t kMaxTotalWeight = std::int64_t{1} << 40;
inline constexpr int kMaxInstanceNodes = 1 << 20;

// Parses and validates a JSON instance document. Throws ParseError with the
// line (for syntax errors) or field path (for schema errors).
Instance ParseInstance(std::string_view text);
// Canonical JSON rendering; ParseInstance(PrintInstance(x)) == x.
std::string PrintInstance(const Instance& instance);

struct GeneratorParams {
  std::uint64_t seed = 1;
  int nodes = 5;
  int arcs = 10;
  Cost max_cost = 4;
  Weight max_weight = 1;
  Problem problem = Problem::kBlocker;
  int max_laminar_sets = 4;
};

// Seeded random instance. Node 0 is the root; when there are enough arcs
// the first n-1 form a random arborescence out of it. Identical parameters
// give identical instances on every run and platform.
Instance GenerateInstance(const GeneratorParams& params);

Digraph InstanceGraph(const Instance& instance);
ArcAttribute InstanceCosts(const Instance& instance);
ArcAttribute InstanceWeights(const Instance& instance);

}  // namespace arbblock

#endif  // ARBBLOCK_INSTANCE_HPP_
