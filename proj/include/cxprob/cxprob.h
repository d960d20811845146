// Copyright 2026 The cxprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to cxprob: complexity-weighted probability spaces over
 * time-complexity functions.
 *
 * Conventions
 *  - Every fallible call returns a cxp_status; CXP_OK is zero. On failure
 *    cxp_last_error() describes the problem (thread-local, valid until the
 *    next failing call on the same thread).
 *  - Exact numbers are passed as strings: "3", "-3/4", "0.125", "1e-12".
 *  - Functions are named by labels: "n^2", "n^(3/2)", "2^n", "(3/2)^n".
 *    Events are comma-separated label lists; "*" stands for the whole
 *    admissible set.
 *  - Strings returned through char** are heap-allocated; release them with
 *    cxp_string_free(). Handles are released with their *_free function;
 *    passing NULL to any *_free is a no-op.
 *  - `digits` is the number of significant decimal digits (>= 15); 0 selects
 *    the default of 50.
 */

#ifndef CXPROB_CXPROB_H_
#define CXPROB_CXPROB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CXP_API __declspec(dllexport)
#else
#define CXP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cxp_status {
  CXP_OK = 0,
  CXP_ERR_INVALID_ARGUMENT = 1,
  CXP_ERR_CONFIG = 2,
  CXP_ERR_DEGENERATE_SPACE = 3,
  CXP_ERR_EMPTY_SPACE = 4,
  CXP_ERR_INSUFFICIENT_RESOURCES = 5,
  CXP_ERR_IO = 6,
  CXP_ERR_NOT_FOUND = 7,
  CXP_ERR_INTERNAL = 8
} cxp_status;

typedef struct cxp_family cxp_family;
typedef struct cxp_model1 cxp_model1;
typedef struct cxp_space cxp_space;
typedef struct cxp_config cxp_config;

CXP_API const char* cxp_version(void);
CXP_API const char* cxp_last_error(void);
CXP_API const char* cxp_status_name(cxp_status status);

/* Process exit code for a status: 0 success, 2 configuration or argument
 * validation, 3 degenerate or empty space (including a budget too small for
 * a single step), 4 I/O, 1 anything else. */
CXP_API int cxp_exit_code(cxp_status status);

CXP_API void cxp_string_free(char* text);

/* ---- function families ------------------------------------------------ */

/* Each spec is NULL or "" (no members of that kind), a "min:max:step" grid,
 * or a comma-separated coefficient list. */
CXP_API cxp_status cxp_family_create(const char* poly_spec, const char* exp_spec,
                                     cxp_family** out);
CXP_API cxp_status cxp_family_from_json(const char* json, cxp_family** out);
CXP_API cxp_status cxp_family_to_json(const cxp_family* family, char** out_json);
CXP_API size_t cxp_family_size(const cxp_family* family);
CXP_API cxp_status cxp_family_member(const cxp_family* family, size_t index, char** out_label);
CXP_API void cxp_family_free(cxp_family* family);

/* f(n) and f'(n) as decimal strings. */
CXP_API cxp_status cxp_evaluate(const char* function, uint64_t n, unsigned digits,
                                char** out_decimal);
CXP_API cxp_status cxp_derivative(const char* function, uint64_t n, unsigned digits,
                                  char** out_decimal);

/* ---- weighted state space ---------------------------------------------- */

CXP_API cxp_status cxp_model1_build(const cxp_family* family, const char* mu_e, uint64_t n,
                                    unsigned digits, cxp_model1** out);
CXP_API cxp_status cxp_model1_weight(const cxp_model1* space, const char* function,
                                     char** out_decimal);
CXP_API cxp_status cxp_model1_probability(const cxp_model1* space, const char* function,
                                          char** out_decimal);
CXP_API cxp_status cxp_model1_normalization(const cxp_model1* space, char** out_decimal);
/* JSON report with one entry per axiom; *all_passed may be NULL. */
CXP_API cxp_status cxp_model1_kolmogorov(const cxp_model1* space, const char* tolerance,
                                         int* all_passed, char** out_json);
CXP_API void cxp_model1_free(cxp_model1* space);

/* Rows (n, p_exp_total, p_poly_total, max_uniform_deviation) as CSV
 * (as_json = 0) or JSON. */
CXP_API cxp_status cxp_asymptotic_report(const cxp_family* family, const char* mu_e,
                                         const uint64_t* n_values, size_t count,
                                         unsigned digits, int as_json, char** out_text);

/* ---- resource-bounded evolution space ---------------------------------- */

CXP_API cxp_status cxp_step_budget(uint64_t n, const char* energy, const char* time,
                                   const char* alpha, const char* beta, char** out_steps);
CXP_API cxp_status cxp_space_build(const cxp_family* family, uint64_t n, const char* energy,
                                   const char* time, const char* alpha, const char* beta,
                                   cxp_space** out);
CXP_API cxp_status cxp_space_step_budget(const cxp_space* space, char** out_steps);
CXP_API size_t cxp_space_admissible_count(const cxp_space* space);
CXP_API cxp_status cxp_space_admissible_member(const cxp_space* space, size_t index,
                                               char** out_label);
/* Exact |A| / |S| as "p/q". */
CXP_API cxp_status cxp_space_probability(const cxp_space* space, const char* event,
                                         char** out_fraction);
CXP_API cxp_status cxp_space_conditional(const cxp_space* space, const char* event_a,
                                         const char* event_b, char** out_fraction);
CXP_API cxp_status cxp_space_admissible_fraction(const cxp_space* space, char** out_fraction);
CXP_API cxp_status cxp_space_to_json(const cxp_space* space, char** out_json);
CXP_API cxp_status cxp_space_from_json(const char* json, cxp_space** out);
/* joint_family may be NULL to reuse a's family. */
CXP_API cxp_status cxp_space_combine_independent(const cxp_space* a, const cxp_space* b,
                                                 const cxp_family* joint_family,
                                                 cxp_space** out);
CXP_API cxp_status cxp_space_combine_dependent(const cxp_space* a, const cxp_space* b,
                                               const char* shared_time,
                                               const cxp_family* joint_family,
                                               cxp_space** out);
CXP_API void cxp_space_free(cxp_space* space);

/* "unreachable", "at-state" or "P-distant". */
CXP_API cxp_status cxp_interpret(const char* probability, char** out_reading);

CXP_API cxp_status cxp_joint_power(const char* pw_a, const char* pw_b, uint64_t n_a,
                                   uint64_t n_b, char** out_fraction);

CXP_API cxp_status cxp_check_constraint(const char* alpha, const char* beta, const char* gamma,
                                        const char* delta, unsigned digits, int* satisfied,
                                        char** out_margin);

/* ---- rotation distance ------------------------------------------------- */

typedef struct cxp_quantum_values {
  double separation;
  double distance_stated;
  double distance_supnorm;
  double error;
  double complexity_probability;
  double quantum_probability;
  double sqrt_quantum_probability;
} cxp_quantum_values;

/* Angles accept rationals and pi expressions such as "pi/3" or "2*pi/7". */
CXP_API cxp_status cxp_quantum_row(const char* alpha, const char* beta, unsigned digits,
                                   cxp_quantum_values* out);

/* ---- batch commands ---------------------------------------------------- */

CXP_API cxp_status cxp_config_load(const char* path, cxp_config** out);
CXP_API cxp_status cxp_config_parse(const char* text, cxp_config** out);
/* Precision stored in the config, or 0 when the config does not set one. */
CXP_API unsigned cxp_config_precision(const cxp_config* config);
CXP_API void cxp_config_free(cxp_config* config);

/* Runs "model1", "model2", "joint" or "quantum". format is "csv", "json" or
 * NULL (config value, else csv); digits 0 uses the config value, else 50.
 * events (model2 only) are extra comma-separated label lists. */
CXP_API cxp_status cxp_run_command(const cxp_config* config, const char* command,
                                   const char* out_dir, const char* format, unsigned digits,
                                   const char* const* events, size_t event_count);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* CXPROB_CXPROB_H_ */
