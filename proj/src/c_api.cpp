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

#include "arbblock/arbblock.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "arbblock/driver.hpp"
#include "arbblock/error.hpp"
#include "arbblock/instance.hpp"

struct arbblock_instance {
  arbblock::Instance value;
};

struct arbblock_report {
  arbblock::Report value;
};

namespace {

thread_local std::string last_error;

arbblock_status StatusOf(arbblock::ErrorCode code) {
  switch (code) {
    case arbblock::ErrorCode::kNoArborescence:
      return ARBBLOCK_NO_ARBORESCENCE;
    case arbblock::ErrorCode::kParseError:
      return ARBBLOCK_PARSE_ERROR;
    case arbblock::ErrorCode::kResourceLimit:
      return ARBBLOCK_RESOURCE_LIMIT;
    case arbblock::ErrorCode::kInvalidArgument:
      return ARBBLOCK_INVALID_ARGUMENT;
  }
  return ARBBLOCK_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
arbblock_status Guard(Body&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const arbblock::Error& e) {
    last_error = e.what();
    return StatusOf(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ARBBLOCK_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ARBBLOCK_INTERNAL;
  }
}

arbblock_status NullArgument(const char* name) {
  last_error = std::string(name) + " must not be NULL";
  return ARBBLOCK_INVALID_ARGUMENT;
}

char* Duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

arbblock::SolveOptions Options(arbblock_problem problem, int global) {
  arbblock::SolveOptions options;
  options.global = global != 0;
  switch (problem) {
    case ARBBLOCK_PROBLEM_DEFAULT:
      break;
    case ARBBLOCK_PROBLEM_MIN_ARB:
      options.problem = arbblock::Problem::kMinArb;
      break;
    case ARBBLOCK_PROBLEM_BLOCKER:
      options.problem = arbblock::Problem::kBlocker;
      break;
    case ARBBLOCK_PROBLEM_TIGHT_BLOCKER:
      options.problem = arbblock::Problem::kTightBlocker;
      break;
    default:
      arbblock::Fail(arbblock::ErrorCode::kInvalidArgument, "unknown problem");
  }
  return options;
}

}  // namespace

extern "C" {

const char* arbblock_version(void) { return "0.1.0"; }

const char* arbblock_last_error(void) { return last_error.c_str(); }

const char* arbblock_status_name(arbblock_status status) {
  switch (status) {
    case ARBBLOCK_OK:
      return "ok";
    case ARBBLOCK_NO_ARBORESCENCE:
      return "no arborescence";
    case ARBBLOCK_PARSE_ERROR:
      return "parse error";
    case ARBBLOCK_RESOURCE_LIMIT:
      return "resource limit";
    case ARBBLOCK_MISMATCH:
      return "mismatch";
    case ARBBLOCK_INVALID_ARGUMENT:
      return "invalid argument";
    case ARBBLOCK_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void arbblock_string_free(char* text) { std::free(text); }

arbblock_status arbblock_instance_parse(const char* text, size_t length,
                                        arbblock_instance** out) {
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  if (text == nullptr) return NullArgument("text");
  return Guard([&] {
    *out = new arbblock_instance{
        arbblock::ParseInstance(std::string_view(text, length))};
    return ARBBLOCK_OK;
  });
}

arbblock_status arbblock_instance_generate(const arbblock_gen_params* params,
                                           arbblock_instance** out) {
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  if (params == nullptr) return NullArgument("params");
  return Guard([&] {
    arbblock::GeneratorParams gp;
    gp.seed = params->seed;
    gp.nodes = params->nodes;
    gp.arcs = params->arcs;
    gp.max_cost = params->max_cost;
    gp.max_weight = params->max_weight;
    gp.problem = Options(params->problem, 0)
                     .problem.value_or(arbblock::Problem::kBlocker);
    *out = new arbblock_instance{arbblock::GenerateInstance(gp)};
    return ARBBLOCK_OK;
  });
}

arbblock_status arbblock_instance_to_json(const arbblock_instance* instance,
                                          char** out) {
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  if (instance == nullptr) return NullArgument("instance");
  return Guard([&] {
    *out = Duplicate(arbblock::PrintInstance(instance->value));
    return ARBBLOCK_OK;
  });
}

size_t arbblock_instance_node_count(const arbblock_instance* instance) {
  return instance == nullptr ? 0 : instance->value.nodes.size();
}

size_t arbblock_instance_arc_count(const arbblock_instance* instance) {
  return instance == nullptr ? 0 : instance->value.arcs.size();
}

void arbblock_instance_free(arbblock_instance* instance) { delete instance; }

arbblock_status arbblock_solve(const arbblock_instance* instance,
                               arbblock_problem problem, int global,
                               arbblock_report** out) {
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  if (instance == nullptr) return NullArgument("instance");
  return Guard([&] {
    *out = new arbblock_report{
        arbblock::Solve(instance->value, Options(problem, global))};
    return ARBBLOCK_OK;
  });
}

arbblock_status arbblock_oracle(const arbblock_instance* instance,
                                arbblock_problem problem, int global,
                                arbblock_report** out) {
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  if (instance == nullptr) return NullArgument("instance");
  return Guard([&] {
    *out = new arbblock_report{
        arbblock::RunOracle(instance->value, Options(problem, global))};
    return ARBBLOCK_OK;
  });
}

arbblock_status arbblock_check(const arbblock_instance* instance,
                               arbblock_problem problem, int global,
                               arbblock_report** solver_out) {
  if (solver_out != nullptr) *solver_out = nullptr;
  if (instance == nullptr) return NullArgument("instance");
  return Guard([&] {
    arbblock::CheckResult result =
        arbblock::Check(instance->value, Options(problem, global));
    if (solver_out != nullptr) {
      *solver_out = new arbblock_report{std::move(result.solver)};
    }
    if (!result.ok) {
      last_error = result.detail;
      return ARBBLOCK_MISMATCH;
    }
    return ARBBLOCK_OK;
  });
}

int arbblock_report_has_optimum(const arbblock_report* report) {
  return report != nullptr && report->value.optimum.has_value();
}

int64_t arbblock_report_optimum(const arbblock_report* report) {
  return arbblock_report_has_optimum(report) ? *report->value.optimum : 0;
}

size_t arbblock_report_arc_count(const arbblock_report* report) {
  return report == nullptr ? 0 : report->value.arcs.size();
}

const char* arbblock_report_arc(const arbblock_report* report, size_t index) {
  if (report == nullptr || index >= report->value.arcs.size()) return nullptr;
  return report->value.arcs[index].c_str();
}

uint64_t arbblock_report_mincut_calls(const arbblock_report* report) {
  return report == nullptr ? 0 : report->value.mincut_calls;
}

double arbblock_report_runtime_ms(const arbblock_report* report) {
  return report == nullptr ? 0 : report->value.runtime_ms;
}

arbblock_status arbblock_report_render(const arbblock_report* report,
                                       arbblock_format format, char** out) {
  if (out == nullptr) return NullArgument("out");
  *out = nullptr;
  if (report == nullptr) return NullArgument("report");
  return Guard([&] {
    *out = Duplicate(format == ARBBLOCK_FORMAT_TEXT
                         ? arbblock::ReportToText(report->value)
                         : arbblock::ReportToJson(report->value));
    return ARBBLOCK_OK;
  });
}

void arbblock_report_free(arbblock_report* report) { delete report; }

}  // extern "C"
