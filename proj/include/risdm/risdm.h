// SPDX-License-Identifier: Apache-2.0
//
// risdm: double-RIS two-way directional modulation simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISDM_RISDM_H
#define RISDM_RISDM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RISDM_BUILDING_LIBRARY)
#    define RISDM_API __declspec(dllexport)
#  else
#    define RISDM_API __declspec(dllimport)
#  endif
#else
#  define RISDM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum risdm_status {
    RISDM_OK = 0,
    RISDM_ERR_INVALID_INPUT = 1,
    RISDM_ERR_INVALID_GEOMETRY = 2,
    RISDM_ERR_SINGULAR_MATRIX = 3,
    RISDM_ERR_DEGENERATE_CHANNEL = 4,
    RISDM_ERR_DEGENERATE_POLYNOMIAL = 5,
    RISDM_ERR_INSUFFICIENT_ANTENNAS = 6,
    RISDM_ERR_NO_CONVERGENCE = 7,
    RISDM_ERR_REFUSED_DEFLATION = 8,
    RISDM_ERR_IO = 9,
    RISDM_ERR_PARSE = 10,
    RISDM_ERR_INTERNAL = 99
} risdm_status;

/* Number of doubles in a gains array: s1..s8, sigma2_a, sigma2_b, sigma2_e. */
#define RISDM_GAINS_LEN 11

typedef struct risdm_scenario risdm_scenario;
typedef struct risdm_sweep risdm_sweep;

RISDM_API const char* risdm_version(void);
/* Message of the last failure on the calling thread; empty after success. */
RISDM_API const char* risdm_last_error(void);
RISDM_API const char* risdm_status_string(risdm_status status);
/* Frees strings returned through char** out-parameters. */
RISDM_API void risdm_string_free(char* str);

RISDM_API risdm_status risdm_scenario_from_json(const char* json, risdm_scenario** out);
RISDM_API risdm_status risdm_scenario_load(const char* path, risdm_scenario** out);
RISDM_API risdm_status risdm_scenario_default(risdm_scenario** out);
RISDM_API void risdm_scenario_free(risdm_scenario* scenario);
RISDM_API risdm_status risdm_scenario_dump(const risdm_scenario* scenario, char** out_json);

/* Designs phases and beamformers; writes RISDM_GAINS_LEN values to gains_out. */
RISDM_API risdm_status risdm_scenario_gains(const risdm_scenario* scenario, const char* method, const char* ris_mode,
                                            uint64_t phase_seed, double* gains_out);

RISDM_API risdm_status risdm_ssr(const double* gains, double beta1, double beta2, double* ssr_out);

/* mode: fixed | epa | es1d | es2d | hicf. step is the grid step for es1d/es2d (ignored otherwise),
 * seed drives the hicf restarts. For "fixed", beta1_out/beta2_out are read as inputs. */
RISDM_API risdm_status risdm_optimize_pa(const double* gains, const char* mode, double step, uint64_t seed,
                                         double* beta1_out, double* beta2_out, double* ssr_out);

/* axis: power_dbm | elements_m | beta | distance_ab */
RISDM_API risdm_status risdm_sweep_create(const risdm_scenario* scenario, const char* axis, risdm_sweep** out);
RISDM_API void risdm_sweep_free(risdm_sweep* sweep);
RISDM_API risdm_status risdm_sweep_set_values(risdm_sweep* sweep, const double* values, size_t count);
/* Comma-separated lists, e.g. "max-sv,leakage", "gpg,random,none", "hicf,epa". */
RISDM_API risdm_status risdm_sweep_set_methods(risdm_sweep* sweep, const char* list);
RISDM_API risdm_status risdm_sweep_set_ris_modes(risdm_sweep* sweep, const char* list);
RISDM_API risdm_status risdm_sweep_set_pa_modes(risdm_sweep* sweep, const char* list);
RISDM_API risdm_status risdm_sweep_set_trials(risdm_sweep* sweep, int trials);
RISDM_API risdm_status risdm_sweep_set_seed(risdm_sweep* sweep, uint64_t seed);
RISDM_API risdm_status risdm_sweep_set_pa_seed(risdm_sweep* sweep, uint64_t seed);
RISDM_API risdm_status risdm_sweep_set_grid_steps(risdm_sweep* sweep, double step_1d, double step_2d);
RISDM_API risdm_status risdm_sweep_set_threads(risdm_sweep* sweep, unsigned threads);
RISDM_API risdm_status risdm_sweep_run_csv(const risdm_sweep* sweep, char** out_csv);

RISDM_API risdm_status risdm_pa_surface_csv(const risdm_scenario* scenario, double step, const char* method,
                                            const char* ris_mode, char** out_csv);

/* Writes text to path (binary, LF preserved). */
RISDM_API risdm_status risdm_write_file(const char* path, const char* text);

#ifdef __cplusplus
}
#endif

#endif
