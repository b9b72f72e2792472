/* Copyright 2026 The Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libarbblock. Objects are opaque handles; every fallible
 * call returns an arbblock_status and leaves a message retrievable with
 * arbblock_last_error() on the calling thread. Strings returned through
 * out-parameters belong to the caller and are released with
 * arbblock_string_free(). */

#ifndef ARBBLOCK_ARBBLOCK_H_
#define ARBBLOCK_ARBBLOCK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(ARBBLOCK_BUILDING_LIBRARY)
#define ARBBLOCK_API __attribute__((visibility("default")))
#else
#define ARBBLOCK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arbblock_status {
  ARBBLOCK_OK = 0,
  ARBBLOCK_NO_ARBORESCENCE = 1,
  ARBBLOCK_PARSE_ERROR = 2,
  ARBBLOCK_RESOURCE_LIMIT = 3,
  ARBBLOCK_MISMATCH = 4,
  ARBBLOCK_INVALID_ARGUMENT = 5,
  ARBBLOCK_INTERNAL = 6
} arbblock_status;

typedef enum arbblock_problem {
  ARBBLOCK_PROBLEM_DEFAULT = -1, /* use the instance's own problem */
  ARBBLOCK_PROBLEM_MIN_ARB = 0,
  ARBBLOCK_PROBLEM_BLOCKER = 1,
  ARBBLOCK_PROBLEM_TIGHT_BLOCKER = 2
} arbblock_problem;

typedef enum arbblock_format {
  ARBBLOCK_FORMAT_JSON = 0,
  ARBBLOCK_FORMAT_TEXT = 1
} arbblock_format;

typedef struct arbblock_instance arbblock_instance;
typedef struct arbblock_report arbblock_report;

typedef struct arbblock_gen_params {
  uint64_t seed;
  int nodes;
  int arcs;
  int64_t max_cost;
  int64_t max_weight;
  arbblock_problem problem;
} arbblock_gen_params;

ARBBLOCK_API const char* arbblock_version(void);
ARBBLOCK_API const char* arbblock_last_error(void);
ARBBLOCK_API const char* arbblock_status_name(arbblock_status status);
ARBBLOCK_API void arbblock_string_free(char* text);

/* `length` bytes of UTF-8 JSON. */
ARBBLOCK_API arbblock_status arbblock_instance_parse(const char* text,
                                                     size_t length,
                                                     arbblock_instance** out);
ARBBLOCK_API arbblock_status arbblock_instance_generate(
    const arbblock_gen_params* params, arbblock_instance** out);
ARBBLOCK_API arbblock_status arbblock_instance_to_json(
    const arbblock_instance* instance, char** out);
ARBBLOCK_API size_t arbblock_instance_node_count(
    const arbblock_instance* instance);
ARBBLOCK_API size_t arbblock_instance_arc_count(
    const arbblock_instance* instance);
ARBBLOCK_API void arbblock_instance_free(arbblock_instance* instance);

/* `global` != 0 selects the root-free variant. */
ARBBLOCK_API arbblock_status arbblock_solve(const arbblock_instance* instance,
                                            arbblock_problem problem,
                                            int global,
                                            arbblock_report** out);
ARBBLOCK_API arbblock_status arbblock_oracle(const arbblock_instance* instance,
                                             arbblock_problem problem,
                                             int global,
                                             arbblock_report** out);
/* Returns ARBBLOCK_MISMATCH (with the reason in arbblock_last_error) when
 * the solver and the oracle disagree. `solver_out` may be NULL. */
ARBBLOCK_API arbblock_status arbblock_check(const arbblock_instance* instance,
                                            arbblock_problem problem,
                                            int global,
                                            arbblock_report** solver_out);

/* Returns 0 when there is no finite optimum (nothing can block). */
ARBBLOCK_API int arbblock_report_has_optimum(const arbblock_report* report);
ARBBLOCK_API int64_t arbblock_report_optimum(const arbblock_report* report);
ARBBLOCK_API size_t arbblock_report_arc_count(const arbblock_report* report);
/* Borrowed pointer, valid until the report is freed. */
ARBBLOCK_API const char* arbblock_report_arc(const arbblock_report* report,
                                             size_t index);
ARBBLOCK_API uint64_t arbblock_report_mincut_calls(
    const arbblock_report* report);
ARBBLOCK_API double arbblock_report_runtime_ms(const arbblock_report* report);
ARBBLOCK_API arbblock_status arbblock_report_render(
    const arbblock_report* report, arbblock_format format, char** out);
ARBBLOCK_API void arbblock_report_free(arbblock_report* report);

#ifdef __cplusplus
}
#endif

#endif /* ARBBLOCK_ARBBLOCK_H_ */
