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

#ifndef ARBBLOCK_DRIVER_HPP_
#define ARBBLOCK_DRIVER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arbblock/instance.hpp"

namespace arbblock {

struct SolveOptions {
  std::optional<Problem> problem;  // overrides the instance's problem
  // Root-free variant: minimum-cost arborescences over all roots.
  bool global = false;
};

struct CertificateLabels {
  std::vector<std::string> family_set;
  std::vector<std::string> z1;
  std::vector<std::string> z2;
  std::optional<std::string> anchor_override;
};

struct Report {
  Problem problem = Problem::kBlocker;
  // Blockers: gamma, or empty when no arc set can block. min-arb: the cost.
  std::optional<std::int64_t> optimum;
  std::vector<int> arc_indices;  // into Instance::arcs, sorted
  std::vector<std::string> arcs;
  std::optional<std::string> root;  // min-arb only
  std::optional<CertificateLabels> certificate;
  double runtime_ms = 0;
  std::uint64_t mincut_calls = 0;
};

// Polynomial solvers. Throws NoArborescence when a rooted problem has no
// arborescence at all, InvalidArgument for a missing root or an invalid
// option combination.
Report Solve(const Instance& instance, const SolveOptions& options = {});
// Exhaustive reference; throws ResourceLimit on instances that are too big.
Report RunOracle(const Instance& instance, const SolveOptions& options = {});

struct CheckResult {
  bool ok = false;
  std::string detail;
  Report solver;
  Report oracle;
};

// Solves both ways, compares the optima and verifies the solver's arc set
// against the oracle's enumeration.
CheckResult Check(const Instance& instance, const SolveOptions& options = {});

std::string ReportToJson(const Report& report);
std::string ReportToText(const Report& report);

}  // namespace arbblock

#endif  // ARBBLOCK_DRIVER_HPP_
