/* Copyright 2026 The relent Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the relent library: seeded Monte Carlo campaigns over
 * two-qubit relative-entropy inequalities, plus the spectral primitives
 * they are built from.
 *
 * Every function returns a relent_status. On failure a description is
 * available from relent_last_error() on the calling thread until the next
 * call into the library from that thread. Handles are opaque; each
 * *_create / run function has a matching *_destroy. Strings returned by
 * accessors are owned by the handle and stay valid until it is destroyed.
 */

#ifndef RELENT_RELENT_H
#define RELENT_RELENT_H

#include <stddef.h>
#include <stdint.h>

#if defined(RELENT_BUILDING_LIBRARY)
#define RELENT_API __attribute__((visibility("default")))
#else
#define RELENT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum relent_status {
    RELENT_OK = 0,
    /* Bad argument or configuration (unknown experiment, zero samples, ...). */
    RELENT_ERR_INVALID_ARGUMENT = 1,
    /* A mathematical precondition failed (non-invertible sigma, ...). */
    RELENT_ERR_DOMAIN = 2,
    /* Rejection sampling gave up. */
    RELENT_ERR_SAMPLING = 3,
    /* Malformed input text (CSV, fixture JSON). */
    RELENT_ERR_PARSE = 4,
    RELENT_ERR_INTERNAL = 5
} relent_status;

typedef enum relent_row_format { RELENT_FORMAT_CSV = 0, RELENT_FORMAT_JSON = 1 } relent_row_format;

typedef struct relent_config relent_config;
typedef struct relent_result relent_result;

RELENT_API const char *relent_version(void);
RELENT_API const char *relent_last_error(void);
RELENT_API const char *relent_status_name(relent_status status);

/* ---- campaign configuration ------------------------------------------ */

/* experiment: "spectra-deltas", "state-deltas", "orbit-verify",
 * "counterexample" or "local-opt". Sample count starts at the experiment's
 * default. */
RELENT_API relent_status relent_config_create(const char *experiment, relent_config **out);
RELENT_API void relent_config_destroy(relent_config *config);

RELENT_API relent_status relent_config_set_samples(relent_config *config, uint64_t n_samples);
RELENT_API relent_status relent_config_set_seed(relent_config *config, uint64_t seed);
RELENT_API relent_status relent_config_set_workers(relent_config *config, uint32_t workers);
RELENT_API relent_status relent_config_set_row_format(relent_config *config, relent_row_format format);
/* Rows written to the samples file (deterministic subsample). */
RELENT_API relent_status relent_config_set_retained_rows(relent_config *config, uint64_t rows);
/* Names: zero_tol, ordering_slack, sandwich_slack, interval_slack,
 * attainment_tol, counterexample_tol, subgroup_slack. */
RELENT_API relent_status relent_config_set_threshold(relent_config *config, const char *name, double value);
/* orbit-verify: Haar unitaries per (rho, sigma) pair. */
RELENT_API relent_status relent_config_set_haar_samples(relent_config *config, uint64_t n);
/* local-opt: random starts per instance and iteration budget per start. */
RELENT_API relent_status relent_config_set_starts(relent_config *config, int32_t starts);
RELENT_API relent_status relent_config_set_max_iters(relent_config *config, int32_t max_iters);
/* counterexample: restrict sigma to the maximally mixed state. */
RELENT_API relent_status relent_config_set_sigma_maximally_mixed(relent_config *config, int enabled);

/* ---- running and reading results ------------------------------------- */

RELENT_API relent_status relent_run(const relent_config *config, relent_result **out);

/* Renders plot_<quantity>.svg artifacts from a samples CSV. */
RELENT_API relent_status relent_plot(const char *csv_text, relent_result **out);

RELENT_API void relent_result_destroy(relent_result *result);

/* Named text outputs (file name, content). */
RELENT_API size_t relent_result_artifact_count(const relent_result *result);
RELENT_API relent_status relent_result_artifact(const relent_result *result, size_t i, const char **name,
                                                const char **content);

/* Summary JSON text (campaign results only; NULL for plot results). */
RELENT_API const char *relent_result_summary_json(const relent_result *result);
/* Counts of internal assertion failures (ordering, sandwich, interval, ...). */
RELENT_API uint64_t relent_result_assertion_failures(const relent_result *result);
RELENT_API double relent_result_runtime_seconds(const relent_result *result);

/* Sign counts and minimum for a named quantity (e.g. "delta_mix"). */
RELENT_API relent_status relent_result_quantity(const relent_result *result, const char *name, uint64_t *negative,
                                                uint64_t *zero, uint64_t *positive, double *min_value);
RELENT_API relent_status relent_result_counter(const relent_result *result, const char *name, uint64_t *value);

/* ---- spectral primitives --------------------------------------------- */

/* Classical relative entropy in bits; *is_infinite set on support violation. */
RELENT_API relent_status relent_relative_entropy_classical(const double *p, const double *q, size_t n,
                                                           double *bits, int *is_infinite);

/* Range of S(U rho U^dagger || sigma) over unitaries, from the spectra. */
RELENT_API relent_status relent_orbit_extremes(const double *rho_spec, const double *sigma_spec, size_t n,
                                               double *min_value, double *max_value);

/* joint: 4 entries; residuals: 3 entries (may be NULL). */
RELENT_API relent_status relent_bravyi_admissible(const double *joint, double margin_a, double margin_b,
                                                  double slack, int *admissible, double *residuals);

/* Triples are (l1, l2, l3, l4, margin_a, margin_b). out receives
 * delta_min, delta_max, delta_mix, delta, delta_bar. */
RELENT_API relent_status relent_compute_deltas(const double *rho_triple, const double *sigma_triple, double *out);

/* Recomputes delta_s from a counterexample fixture JSON. */
RELENT_API relent_status relent_fixture_recompute(const char *fixture_json, double *stored, double *recomputed);

#ifdef __cplusplus
}
#endif

#endif
