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

#include "arbblock/instance.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "arbblock/error.hpp"
#include "json.hpp"

namespace arbblock {
namespace {

using nlohmann::json;

[[noreturn]] void SchemaError(const std::string& path,
                              const std::string& message) {
  Fail(ErrorCode::kParseError, "field '" + path + "': " + message);
}

int LineOf(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + byte, '\n'));
}

const json& Require(const json& object, const char* key,
                    const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) SchemaError(path + "." + key, "missing");
  return *it;
}

std::string RequireString(const json& value, const std::string& path) {
  if (!value.is_string()) SchemaError(path, "expected a string");
  std::string s = value.get<std::string>();
  if (s.empty()) SchemaError(path, "must not be empty");
  return s;
}

std::int64_t RequireInteger(const json& value, const std::string& path) {
  if (!value.is_number_integer()) SchemaError(path, "expected an integer");
  if (value.is_number_unsigned() &&
      value.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    SchemaError(path, "integer out of range");
  }
  return value.get<std::int64_t>();
}

void RejectUnknownKeys(const json& object, const std::string& path,
                       std::initializer_list<const char*> known) {
  for (auto it = object.begin(); it != object.end(); ++it) {
    if (std::none_of(known.begin(), known.end(),
                     [&](const char* k) { return it.key() == k; })) {
      SchemaError(path + "." + it.key(), "unknown field");
    }
  }
}

// Modulo reduction keeps the stream identical across standard libraries,
// unlike std::uniform_int_distribution.
std::int64_t Uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

}  // namespace

const char* ProblemName(Problem problem) {
  switch (problem) {
    case Problem::kMinArb:
      return "min-arb";
    case Problem::kBlocker:
      return "blocker";
    case Problem::kTightBlocker:
      return "tight-blocker";
  }
  return "unknown";
}

Problem ParseProblem(std::string_view name) {
  if (name == "min-arb") return Problem::kMinArb;
  if (name == "blocker") return Problem::kBlocker;
  if (name == "tight-blocker") return Problem::kTightBlocker;
  Fail(ErrorCode::kInvalidArgument,
       "unknown problem '" + std::string(name) +
           "' (expected min-arb, blocker or tight-blocker)");
}

Instance ParseInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    Fail(ErrorCode::kParseError, "line " + std::to_string(LineOf(text, e.byte)) +
                                     ": " + e.what());
  }
  if (!doc.is_object()) SchemaError("$", "expected an object");
  RejectUnknownKeys(doc, "$", {"nodes", "arcs", "root", "laminar", "problem"});

  Instance inst;
  const json& nodes = Require(doc, "nodes", "$");
  if (!nodes.is_array()) SchemaError("$.nodes", "expected an array");
  if (nodes.size() > static_cast<std::size_t>(kMaxInstanceNodes)) {
    SchemaError("$.nodes", "too many nodes");
  }
  std::unordered_map<std::string, int> label_index;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::string path = "$.nodes[" + std::to_string(i) + "]";
    std::string label = RequireString(nodes[i], path);
    if (!label_index.emplace(label, static_cast<int>(i)).second) {
      SchemaError(path, "duplicate node label '" + label + "'");
    }
    inst.nodes.push_back(std::move(label));
  }
  auto node_ref = [&](const json& value, const std::string& path) {
    std::string label = RequireString(value, path);
    auto it = label_index.find(label);
    if (it == label_index.end()) {
      SchemaError(path, "unknown node '" + label + "'");
    }
    return it->second;
  };

  const json& arcs = doc.contains("arcs") ? doc["arcs"] : json::array();
  if (!arcs.is_array()) SchemaError("$.arcs", "expected an array");
  std::unordered_set<std::string> arc_ids;
  std::int64_t total_cost = 0;
  std::int64_t total_weight = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    std::string path = "$.arcs[" + std::to_string(i) + "]";
    const json& a = arcs[i];
    if (!a.is_object()) SchemaError(path, "expected an object");
    RejectUnknownKeys(a, path, {"id", "tail", "head", "cost", "weight"});
    InstanceArc arc;
    const json& id = Require(a, "id", path);
    arc.id = id.is_number_integer() ? std::to_string(id.get<std::int64_t>())
                                    : RequireString(id, path + ".id");
    if (!arc_ids.insert(arc.id).second) {
      SchemaError(path + ".id", "duplicate arc id '" + arc.id + "'");
    }
    arc.tail = node_ref(Require(a, "tail", path), path + ".tail");
    arc.head = node_ref(Require(a, "head", path), path + ".head");
    if (arc.tail == arc.head) SchemaError(path, "self-loops are not allowed");
    if (a.contains("cost")) arc.cost = RequireInteger(a["cost"], path + ".cost");
    if (a.contains("weight")) {
      arc.weight = RequireInteger(a["weight"], path + ".weight");
    }
    if (arc.cost > kMaxAbsCost || arc.cost < -kMaxAbsCost) {
      SchemaError(path + ".cost", "magnitude exceeds 2^40");
    }
    if (arc.weight < 0) SchemaError(path + ".weight", "must be non-negative");
    if (arc.weight > kMaxTotalWeight) {
      SchemaError(path + ".weight", "exceeds 2^40");
    }
    total_cost += arc.cost < 0 ? -arc.cost : arc.cost;
    total_weight += arc.weight;
    if (total_cost > kMaxTotalAbsCost) {
      SchemaError("$.arcs", "total absolute cost exceeds 2^50");
    }
    if (total_weight > kMaxTotalWeight) {
      SchemaError("$.arcs", "total weight exceeds 2^40");
    }
    inst.arcs.push_back(std::move(arc));
  }

  if (doc.contains("root") && !doc["root"].is_null()) {
    inst.root = node_ref(doc["root"], "$.root");
  }
  if (doc.contains("laminar") && !doc["laminar"].is_null()) {
    const json& lam = doc["laminar"];
    if (!lam.is_array()) SchemaError("$.laminar", "expected an array");
    std::vector<NodeSet> sets;
    for (std::size_t i = 0; i < lam.size(); ++i) {
      std::string path = "$.laminar[" + std::to_string(i) + "]";
      if (!lam[i].is_array()) SchemaError(path, "expected an array of labels");
      if (lam[i].empty()) SchemaError(path, "must not be empty");
      std::vector<NodeId> members;
      for (std::size_t j = 0; j < lam[i].size(); ++j) {
        members.push_back(
            node_ref(lam[i][j], path + "[" + std::to_string(j) + "]"));
      }
      NodeSet set = MakeNodeSet(members);
      if (set.size() != members.size()) SchemaError(path, "repeated label");
      for (std::size_t k = 0; k < sets.size(); ++k) {
        if (sets[k] == set) SchemaError(path, "duplicate member");
        if (!IsLaminarPair(sets[k], set)) {
          SchemaError(path, "crosses $.laminar[" + std::to_string(k) + "]");
        }
      }
      sets.push_back(std::move(set));
    }
    inst.laminar = std::move(sets);
  }
  if (doc.contains("problem")) {
    std::string name = RequireString(doc["problem"], "$.problem");
    try {
      inst.problem = ParseProblem(name);
    } catch (const Error& e) {
      SchemaError("$.problem", e.what());
    }
  }
  return inst;
}

std::string PrintInstance(const Instance& inst) {
  json doc;
  doc["nodes"] = inst.nodes;
  json arcs = json::array();
  for (const InstanceArc& a : inst.arcs) {
    arcs.push_back({{"id", a.id},
                    {"tail", inst.nodes[a.tail]},
                    {"head", inst.nodes[a.head]},
                    {"cost", a.cost},
                    {"weight", a.weight}});
  }
  doc["arcs"] = std::move(arcs);
  if (inst.root) doc["root"] = inst.nodes[*inst.root];
  if (inst.laminar) {
    json lam = json::array();
    for (const NodeSet& set : *inst.laminar) {
      json labels = json::array();
      for (NodeId v : set) labels.push_back(inst.nodes[v]);
      lam.push_back(std::move(labels));
    }
    doc["laminar"] = std::move(lam);
  }
  doc["problem"] = ProblemName(inst.problem);
  return doc.dump(2) + "\n";
}

Instance GenerateInstance(const GeneratorParams& params) {
  if (params.nodes < 1) {
    Fail(ErrorCode::kInvalidArgument, "generator needs at least one node");
  }
  if (params.arcs < 0 || params.max_cost < 0 || params.max_weight < 1) {
    Fail(ErrorCode::kInvalidArgument,
         "generator needs arcs >= 0, max-cost >= 0 and max-weight >= 1");
  }
  if (params.nodes < 2 && params.arcs > 0) {
    Fail(ErrorCode::kInvalidArgument, "a single node admits no arcs");
  }
  std::mt19937_64 rng(params.seed);
  const int n = params.nodes;
  Instance inst;
  inst.problem = params.problem;
  for (int v = 0; v < n; ++v) inst.nodes.push_back("v" + std::to_string(v));
  if (params.problem != Problem::kTightBlocker) inst.root = 0;

  auto add_arc = [&](int tail, int head) {
    InstanceArc arc;
    arc.id = "e" + std::to_string(inst.arcs.size());
    arc.tail = tail;
    arc.head = head;
    arc.cost = Uniform(rng, 0, params.max_cost);
    arc.weight = Uniform(rng, 1, params.max_weight);
    inst.arcs.push_back(std::move(arc));
  };
  int remaining = params.arcs;
  if (remaining >= n - 1) {
    // Attach nodes 1..n-1 in a random order to already attached ones.
    std::vector<int> order;
    for (int v = 1; v < n; ++v) order.push_back(v);
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i) {
      std::swap(order[i], order[Uniform(rng, 0, i)]);
    }
    std::vector<int> attached = {0};
    for (int v : order) {
      add_arc(attached[Uniform(rng, 0, static_cast<int>(attached.size()) - 1)],
              v);
      attached.push_back(v);
    }
    remaining -= n - 1;
  }
  for (; remaining > 0; --remaining) {
    int tail = static_cast<int>(Uniform(rng, 0, n - 1));
    int head = static_cast<int>(Uniform(rng, 0, n - 2));
    if (head >= tail) ++head;
    add_arc(tail, head);
  }

  if (params.problem == Problem::kTightBlocker) {
    std::vector<NodeSet> sets;
    int wanted = static_cast<int>(Uniform(rng, 0, params.max_laminar_sets));
    for (int attempt = 0; attempt < 20 * (wanted + 1) &&
                          static_cast<int>(sets.size()) < wanted;
         ++attempt) {
      std::vector<NodeId> pool(n);
      for (int v = 0; v < n; ++v) pool[v] = v;
      for (int i = n - 1; i > 0; --i) std::swap(pool[i], pool[Uniform(rng, 0, i)]);
      int size = static_cast<int>(Uniform(rng, 1, n));
      NodeSet set = MakeNodeSet({pool.begin(), pool.begin() + size});
      bool ok = std::all_of(sets.begin(), sets.end(), [&](const NodeSet& s) {
        return s != set && IsLaminarPair(s, set);
      });
      if (ok) sets.push_back(std::move(set));
    }
    inst.laminar = std::move(sets);
  }
  return inst;
}

Digraph InstanceGraph(const Instance& instance) {
  std::vector<Arc> arcs;
  arcs.reserve(instance.arcs.size());
  for (std::size_t i = 0; i < instance.arcs.size(); ++i) {
    arcs.push_back({static_cast<ArcId>(i), instance.arcs[i].tail,
                    instance.arcs[i].head});
  }
  return Digraph(static_cast<int>(instance.nodes.size()), std::move(arcs));
}

ArcAttribute InstanceCosts(const Instance& instance) {
  std::vector<std::int64_t> values;
  for (const InstanceArc& a : instance.arcs) values.push_back(a.cost);
  return ArcAttribute(std::move(values));
}

ArcAttribute InstanceWeights(const Instance& instance) {
  std::vector<std::int64_t> values;
  for (const InstanceArc& a : instance.arcs) values.push_back(a.weight);
  return ArcAttribute(std::move(values));
}

}  // namespace arbblock
