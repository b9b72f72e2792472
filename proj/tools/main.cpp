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

// arbblock: minimum-cost arborescence blockers from the command line.
//
//   arbblock solve  --input inst.json [--problem P] [--global] [--output text]
//   arbblock oracle --input inst.json ...
//   arbblock check  --input inst.json | --seed S --nodes N --arcs M --count K
//   arbblock gen    --seed S --nodes N --arcs M [--max-cost C] [--max-weight W]
//
// Exit codes: 0 ok, 1 no arborescence or nothing can block, 2 bad input,
// 3 instance too large for the oracle, 4 solver/oracle mismatch.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "arbblock/arbblock.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitInternal = 5;

struct InstanceDeleter {
  void operator()(arbblock_instance* p) const { arbblock_instance_free(p); }
};
struct ReportDeleter {
  void operator()(arbblock_report* p) const { arbblock_report_free(p); }
};
using InstancePtr = std::unique_ptr<arbblock_instance, InstanceDeleter>;
using ReportPtr = std::unique_ptr<arbblock_report, ReportDeleter>;

int ExitCode(arbblock_status status) {
  switch (status) {
    case ARBBLOCK_OK:
      return kExitOk;
    case ARBBLOCK_NO_ARBORESCENCE:
      return kExitInfeasible;
    case ARBBLOCK_PARSE_ERROR:
    case ARBBLOCK_INVALID_ARGUMENT:
      return kExitUsage;
    case ARBBLOCK_RESOURCE_LIMIT:
      return kExitResource;
    case ARBBLOCK_MISMATCH:
      return kExitMismatch;
    case ARBBLOCK_INTERNAL:
      break;
  }
  return kExitInternal;
}

int Report(arbblock_status status) {
  std::cerr << "arbblock: " << arbblock_status_name(status) << ": "
            << arbblock_last_error() << "\n";
  return ExitCode(status);
}

struct Options {
  std::string input;
  std::string problem;
  bool global = false;
  std::string output = "json";
  std::uint64_t seed = 1;
  int nodes = 5;
  int arcs = 10;
  std::int64_t max_cost = 4;
  std::int64_t max_weight = 1;
  int count = 1;
};

const std::map<std::string, arbblock_problem> kProblems = {
    {"min-arb", ARBBLOCK_PROBLEM_MIN_ARB},
    {"blocker", ARBBLOCK_PROBLEM_BLOCKER},
    {"tight-blocker", ARBBLOCK_PROBLEM_TIGHT_BLOCKER},
};

arbblock_problem ProblemOf(const Options& o) {
  return o.problem.empty() ? ARBBLOCK_PROBLEM_DEFAULT : kProblems.at(o.problem);
}

arbblock_status LoadInstance(const std::string& path, InstancePtr& out) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "arbblock: cannot read '" << path << "'\n";
      return ARBBLOCK_INVALID_ARGUMENT;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  arbblock_instance* raw = nullptr;
  arbblock_status status = arbblock_instance_parse(text.data(), text.size(), &raw);
  out.reset(raw);
  return status;
}

arbblock_status Generate(const Options& o, std::uint64_t seed,
                         InstancePtr& out) {
  arbblock_gen_params params{seed, o.nodes, o.arcs, o.max_cost, o.max_weight,
                             ProblemOf(o)};
  arbblock_instance* raw = nullptr;
  arbblock_status status = arbblock_instance_generate(&params, &raw);
  out.reset(raw);
  return status;
}

int PrintReport(const arbblock_report* report, const Options& o) {
  char* text = nullptr;
  arbblock_status status = arbblock_report_render(
      report, o.output == "text" ? ARBBLOCK_FORMAT_TEXT : ARBBLOCK_FORMAT_JSON,
      &text);
  if (status != ARBBLOCK_OK) return Report(status);
  std::fputs(text, stdout);
  arbblock_string_free(text);
  return arbblock_report_has_optimum(report) ? kExitOk : kExitInfeasible;
}

using Runner = arbblock_status (*)(const arbblock_instance*, arbblock_problem,
                                   int, arbblock_report**);

int RunSolver(const Options& o, Runner runner) {
  InstancePtr inst;
  if (arbblock_status s = LoadInstance(o.input, inst); s != ARBBLOCK_OK) {
    return Report(s);
  }
  arbblock_report* raw = nullptr;
  arbblock_status s = runner(inst.get(), ProblemOf(o), o.global ? 1 : 0, &raw);
  ReportPtr report(raw);
  if (s != ARBBLOCK_OK) return Report(s);
  return PrintReport(report.get(), o);
}

int RunCheck(const Options& o) {
  int passed = 0;
  for (int i = 0; i < o.count; ++i) {
    InstancePtr inst;
    std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
    arbblock_status s = o.input.empty() ? Generate(o, seed, inst)
                                        : LoadInstance(o.input, inst);
    if (s != ARBBLOCK_OK) return Report(s);
    arbblock_report* raw = nullptr;
    s = arbblock_check(inst.get(), ProblemOf(o), o.global ? 1 : 0, &raw);
    ReportPtr report(raw);
    if (s == ARBBLOCK_NO_ARBORESCENCE && o.input.empty()) {
      // Random instances without an arborescence have nothing to compare.
      ++passed;
      continue;
    }
    if (s != ARBBLOCK_OK) {
      if (o.input.empty()) std::cerr << "arbblock: seed " << seed << "\n";
      return Report(s);
    }
    ++passed;
  }
  if (o.output == "text" || o.count > 1) {
    std::printf("check: %d/%d instances agree\n", passed, o.count);
  } else {
    std::printf("{\"check\": \"ok\", \"instances\": %d}\n", passed);
  }
  return kExitOk;
}

int RunGen(const Options& o) {
  InstancePtr inst;
  if (arbblock_status s = Generate(o, o.seed, inst); s != ARBBLOCK_OK) {
    return Report(s);
  }
  char* text = nullptr;
  arbblock_status s = arbblock_instance_to_json(inst.get(), &text);
  if (s != ARBBLOCK_OK) return Report(s);
  std::fputs(text, stdout);
  arbblock_string_free(text);
  return kExitOk;
}

void AddProblemFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--problem", o.problem, "min-arb, blocker or tight-blocker")
      ->check(CLI::IsMember({"min-arb", "blocker", "tight-blocker"}));
  cmd->add_flag("--global", o.global,
                "minimum-cost arborescences over all roots");
  cmd->add_option("--output", o.output, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

void AddGeneratorFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--nodes", o.nodes, "number of nodes")
      ->check(CLI::Range(1, 1 << 20));
  cmd->add_option("--arcs", o.arcs, "number of arcs")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-cost", o.max_cost, "costs are drawn from [0, C]")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-weight", o.max_weight, "weights are drawn from [1, W]")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-weight blockers of minimum-cost arborescences"};
  app.set_version_flag("--version", std::string(arbblock_version()));
  app.require_subcommand(1);
  Options o;

  CLI::App* solve = app.add_subcommand("solve", "run the polynomial solver");
  solve->add_option("--input", o.input, "instance JSON file, - for stdin")
      ->required();
  AddProblemFlags(solve, o);

  CLI::App* oracle = app.add_subcommand("oracle", "run the exhaustive oracle");
  oracle->add_option("--input", o.input, "instance JSON file, - for stdin")
      ->required();
  AddProblemFlags(oracle, o);

  CLI::App* check =
      app.add_subcommand("check", "compare solver and oracle");
  check->add_option("--input", o.input, "instance JSON file, - for stdin");
  AddProblemFlags(check, o);
  AddGeneratorFlags(check, o);
  check->add_option("--count", o.count, "number of generated instances")
      ->check(CLI::PositiveNumber);

  CLI::App* gen = app.add_subcommand("gen", "print a random instance");
  gen->add_option("--problem", o.problem, "min-arb, blocker or tight-blocker")
      ->check(CLI::IsMember({"min-arb", "blocker", "tight-blocker"}));
  AddGeneratorFlags(gen, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*solve) return RunSolver(o, arbblock_solve);
  if (*oracle) return RunSolver(o, arbblock_oracle);
  if (*check) {
    if (!o.input.empty() && o.count != 1) {
      std::cerr << "arbblock: --count applies to generated instances only\n";
      return kExitUsage;
    }
    return RunCheck(o);
  }
  return RunGen(o);
}
