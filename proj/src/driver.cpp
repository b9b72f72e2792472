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

#include "arbblock/driver.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <tuple>

#include "arbblock/arborescence.hpp"
#include "arbblock/blocker.hpp"
#include "arbblock/error.hpp"
#include "arbblock/oracle.hpp"
#include "json.hpp"

namespace arbblock {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

Problem EffectiveProblem(const Instance& inst, const SolveOptions& options) {
  Problem p = options.problem.value_or(inst.problem);
  if (options.global && p == Problem::kTightBlocker) {
    Fail(ErrorCode::kInvalidArgument,
         "--global applies to min-arb and blocker only");
  }
  return p;
}

NodeId RequireRoot(const Instance& inst) {
  if (!inst.root) {
    Fail(ErrorCode::kInvalidArgument,
         "this problem needs a root (or the global option)");
  }
  return *inst.root;
}

// Instance extended by a fresh root with an arc to every node. The new arcs
// are so expensive that a minimum-cost arborescence uses exactly one, and so
// heavy that a blocker never picks one unless nothing else works.
struct GlobalReduction {
  Digraph graph;
  ArcAttribute cost;
  ArcAttribute weight;
  NodeId root = 0;
  Cost root_arc_cost = 0;
  Weight root_arc_weight = 0;
  std::size_t original_arcs = 0;
};

GlobalReduction ReduceGlobal(const Instance& inst) {
  GlobalReduction red;
  const int n = static_cast<int>(inst.nodes.size());
  Digraph base = InstanceGraph(inst);
  if (RootSet(base).empty()) {
    Fail(ErrorCode::kNoArborescence, "the graph has no spanning arborescence");
  }
  Cost abs_cost = 0;
  Weight total_weight = 0;
  for (const InstanceArc& a : inst.arcs) {
    abs_cost += a.cost < 0 ? -a.cost : a.cost;
    total_weight += a.weight;
  }
  red.root = n;
  red.root_arc_cost = 2 * abs_cost + 1;
  red.root_arc_weight = total_weight + 1;
  red.original_arcs = inst.arcs.size();
  std::vector<Arc> arcs(base.arcs().begin(), base.arcs().end());
  const ArcAttribute base_cost = InstanceCosts(inst);
  const ArcAttribute base_weight = InstanceWeights(inst);
  std::vector<std::int64_t> cost(base_cost.values().begin(),
                                 base_cost.values().end());
  std::vector<std::int64_t> weight(base_weight.values().begin(),
                                   base_weight.values().end());
  for (NodeId v = 0; v < n; ++v) {
    arcs.push_back({static_cast<ArcId>(arcs.size()), red.root, v});
    cost.push_back(red.root_arc_cost);
    weight.push_back(red.root_arc_weight);
  }
  red.graph = Digraph(n + 1, std::move(arcs));
  red.cost = ArcAttribute(std::move(cost));
  red.weight = ArcAttribute(std::move(weight));
  return red;
}

// Label of the synthetic root; never clashes with a real label.
std::string SyntheticRootLabel(const Instance& inst) {
  std::string label = "_root";
  while (std::find(inst.nodes.begin(), inst.nodes.end(), label) !=
         inst.nodes.end()) {
    label += "_";
  }
  return label;
}

std::vector<std::string> Labels(const Instance& inst, const NodeSet& set,
                                const std::string& extra) {
  std::vector<std::string> out;
  for (NodeId v : set) {
    out.push_back(v < static_cast<NodeId>(inst.nodes.size()) ? inst.nodes[v]
                                                             : extra);
  }
  return out;
}

void SetArcs(const Instance& inst, std::vector<ArcId> ids, Report& report) {
  std::sort(ids.begin(), ids.end());
  report.arc_indices.clear();
  report.arcs.clear();
  for (ArcId id : ids) {
    report.arc_indices.push_back(id);
    report.arcs.push_back(inst.arcs[id].id);
  }
}

void FillBlocker(const Instance& inst, const BlockerResult& result,
                 const std::string& extra_label, Report& report) {
  report.mincut_calls = result.min_cut_calls;
  if (!result.blockable()) return;
  report.optimum = result.gamma;
  SetArcs(inst, result.arcs, report);
  if (result.certificate) {
    const DoubleCutCertificate& c = *result.certificate;
    CertificateLabels labels;
    labels.family_set = Labels(inst, c.family_set, extra_label);
    labels.z1 = Labels(inst, c.z1, extra_label);
    labels.z2 = Labels(inst, c.z2, extra_label);
    if (c.anchor_override) {
      labels.anchor_override = Labels(inst, {*c.anchor_override}, extra_label)[0];
    }
    report.certificate = std::move(labels);
  }
}

Report SolveMinArb(const Instance& inst, const SolveOptions& options) {
  Report report;
  if (options.global) {
    GlobalReduction red = ReduceGlobal(inst);
    CostedArborescence best =
        MinCostArborescence(red.graph, red.cost, red.root);
    std::vector<ArcId> ids;
    for (ArcId id : best.arborescence.arcs) {
      if (static_cast<std::size_t>(id) < red.original_arcs) {
        ids.push_back(id);
      } else {
        report.root = inst.nodes[red.graph.arc(id).head];
      }
    }
    report.optimum = best.cost - red.root_arc_cost;
    SetArcs(inst, std::move(ids), report);
    return report;
  }
  NodeId root = RequireRoot(inst);
  CostedArborescence best =
      MinCostArborescence(InstanceGraph(inst), InstanceCosts(inst), root);
  report.optimum = best.cost;
  report.root = inst.nodes[root];
  SetArcs(inst, best.arborescence.arcs, report);
  return report;
}

Report SolveBlockerProblem(const Instance& inst, const SolveOptions& options) {
  Report report;
  if (options.global) {
    GlobalReduction red = ReduceGlobal(inst);
    BlockerResult result =
        SolveBlocker(red.graph, red.root, red.cost, red.weight);
    bool synthetic = std::any_of(
        result.arcs.begin(), result.arcs.end(), [&](ArcId id) {
          return static_cast<std::size_t>(id) >= red.original_arcs;
        });
    if (synthetic) {
      // Only a single-node graph gets here: its empty arborescence is
      // unblockable.
      report.mincut_calls = result.min_cut_calls;
      return report;
    }
    FillBlocker(inst, result, SyntheticRootLabel(inst), report);
    return report;
  }
  NodeId root = RequireRoot(inst);
  BlockerResult result = SolveBlocker(InstanceGraph(inst), root,
                                      InstanceCosts(inst),
                                      InstanceWeights(inst));
  FillBlocker(inst, result, "", report);
  return report;
}

LaminarFamily InstanceFamily(const Instance& inst) {
  return LaminarFamily(static_cast<int>(inst.nodes.size()),
                       inst.laminar.value_or(std::vector<NodeSet>{}));
}

Report SolveTightBlocker(const Instance& inst) {
  Report report;
  BlockerResult result = CoverTightArborescences(
      InstanceGraph(inst), InstanceFamily(inst), InstanceWeights(inst));
  FillBlocker(inst, result, "", report);
  return report;
}

std::optional<NodeId> OracleRoot(const Instance& inst,
                                 const SolveOptions& options) {
  if (options.global) return std::nullopt;
  return RequireRoot(inst);
}

// Targets the oracle must hit for the blocker problems.
std::vector<Arborescence> OracleTargets(const Instance& inst, Problem problem,
                                        const SolveOptions& options) {
  Digraph graph = InstanceGraph(inst);
  if (problem == Problem::kTightBlocker) {
    std::vector<Arborescence> tight;
    const std::vector<NodeSet> family =
        inst.laminar.value_or(std::vector<NodeSet>{});
    for (Arborescence& b : oracle::EnumerateArborescences(graph)) {
      if (oracle::IsLTightDirect(graph, family, b)) tight.push_back(std::move(b));
    }
    return tight;
  }
  std::vector<Arborescence> targets = oracle::MinCostArborescences(
      graph, OracleRoot(inst, options), InstanceCosts(inst));
  if (targets.empty()) {
    Fail(ErrorCode::kNoArborescence, "the graph has no spanning arborescence" +
                                         std::string(options.global
                                                         ? ""
                                                         : " at the root"));
  }
  return targets;
}

void AppendLabels(std::ostringstream& out, const std::vector<std::string>& v) {
  out << "{";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "}";
}

}  // namespace

Report Solve(const Instance& instance, const SolveOptions& options) {
  const Problem problem = EffectiveProblem(instance, options);
  const auto start = Clock::now();
  Report report;
  switch (problem) {
    case Problem::kMinArb:
      report = SolveMinArb(instance, options);
      break;
    case Problem::kBlocker:
      report = SolveBlockerProblem(instance, options);
      break;
    case Problem::kTightBlocker:
      report = SolveTightBlocker(instance);
      break;
  }
  report.problem = problem;
  report.runtime_ms = MillisSince(start);
  return report;
}

Report RunOracle(const Instance& instance, const SolveOptions& options) {
  const Problem problem = EffectiveProblem(instance, options);
  const auto start = Clock::now();
  Report report;
  report.problem = problem;
  if (problem == Problem::kMinArb) {
    Cost optimum = 0;
    std::vector<Arborescence> best = oracle::MinCostArborescences(
        InstanceGraph(instance), OracleRoot(instance, options),
        InstanceCosts(instance), &optimum);
    if (best.empty()) {
      Fail(ErrorCode::kNoArborescence, "the graph has no spanning arborescence");
    }
    auto first = std::min_element(
        best.begin(), best.end(), [](const Arborescence& a, const Arborescence& b) {
          return std::tie(a.arcs, a.root) < std::tie(b.arcs, b.root);
        });
    report.optimum = optimum;
    report.root = instance.nodes[first->root];
    SetArcs(instance, first->arcs, report);
  } else {
    oracle::HittingSet hit = oracle::MinimumHittingSet(
        OracleTargets(instance, problem, options), InstanceWeights(instance));
    if (hit.gamma != kInfiniteWeight) {
      report.optimum = hit.gamma;
      SetArcs(instance, hit.arcs, report);
    }
  }
  report.runtime_ms = MillisSince(start);
  return report;
}

CheckResult Check(const Instance& instance, const SolveOptions& options) {
  CheckResult check;
  check.solver = Solve(instance, options);
  check.oracle = RunOracle(instance, options);
  auto show = [](const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string("none");
  };
  if (check.solver.optimum != check.oracle.optimum) {
    check.detail = "optimum differs: solver " + show(check.solver.optimum) +
                   ", oracle " + show(check.oracle.optimum);
    return check;
  }
  Weight total = 0;
  const Problem problem = check.solver.problem;
  for (int i : check.solver.arc_indices) {
    total += problem == Problem::kMinArb ? instance.arcs[i].cost
                                         : instance.arcs[i].weight;
  }
  if (check.solver.optimum && total != *check.solver.optimum) {
    check.detail = "reported arcs do not add up to the optimum";
    return check;
  }
  if (problem == Problem::kMinArb) {
    Digraph graph = InstanceGraph(instance);
    auto root = std::find(instance.nodes.begin(), instance.nodes.end(),
                          check.solver.root.value_or(""));
    if (root == instance.nodes.end() ||
        !IsSpanningArborescence(graph,
                                static_cast<NodeId>(root - instance.nodes.begin()),
                                check.solver.arc_indices)) {
      check.detail = "solver output is not a spanning arborescence";
      return check;
    }
  } else if (check.solver.optimum) {
    for (const Arborescence& b : OracleTargets(instance, problem, options)) {
      bool hit = std::any_of(b.arcs.begin(), b.arcs.end(), [&](ArcId id) {
        return std::binary_search(check.solver.arc_indices.begin(),
                                  check.solver.arc_indices.end(), id);
      });
      if (!hit) {
        check.detail = "an arborescence survives the solver's arc set";
        return check;
      }
    }
  }
  check.ok = true;
  check.detail = "ok";
  return check;
}

std::string ReportToJson(const Report& report) {
  nlohmann::ordered_json doc;
  doc["problem"] = ProblemName(report.problem);
  doc["optimum"] = report.optimum ? nlohmann::ordered_json(*report.optimum)
                                  : nlohmann::ordered_json(nullptr);
  doc["arcs"] = report.arcs;
  if (report.root) doc["root"] = *report.root;
  if (report.certificate) {
    const CertificateLabels& c = *report.certificate;
    doc["certificate"] = {{"F", c.family_set}, {"Z1", c.z1}, {"Z2", c.z2}};
    if (c.anchor_override) doc["certificate"]["anchor"] = *c.anchor_override;
  } else {
    doc["certificate"] = nullptr;
  }
  doc["runtime_ms"] = report.runtime_ms;
  doc["mincut_calls"] = report.mincut_calls;
  return doc.dump(2) + "\n";
}

std::string ReportToText(const Report& report) {
  std::ostringstream out;
  out << "problem: " << ProblemName(report.problem) << "\n";
  out << "optimum: "
      << (report.optimum ? std::to_string(*report.optimum) : "none") << "\n";
  if (report.root) out << "root: " << *report.root << "\n";
  out << "arcs: ";
  AppendLabels(out, report.arcs);
  out << "\n";
  if (report.certificate) {
    const CertificateLabels& c = *report.certificate;
    out << "certificate: F=";
    AppendLabels(out, c.family_set);
    out << " Z1=";
    AppendLabels(out, c.z1);
    out << " Z2=";
    AppendLabels(out, c.z2);
    if (c.anchor_override) out << " anchor=" << *c.anchor_override;
    out << "\n";
  }
  out << "runtime_ms: " << report.runtime_ms << "\n";
  out << "mincut_calls: " << report.mincut_calls << "\n";
  return out.str();
}

}  // namespace arbblock
