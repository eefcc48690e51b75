/*
 * Copyright 2026 the ghzw authors
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

/*
 * C interface to the ghzw library: tripartite entanglement measures
 * (three-tangle and three-pi) for the pure family
 *   |q,theta> = sqrt(q)|GHZ> - sqrt(1-q) e^{i theta}|W>
 * and the rank-2 mixture p|GHZ><GHZ| + (1-p)|W><W|, with the piecewise
 * convex-roof closed forms, optimal-decomposition construction, and a
 * brute-force decomposition-search oracle.
 *
 * All functions returning ghzw_status store a message retrievable with
 * ghzw_last_error() on failure. Out-parameters are written only on
 * GHZW_OK. Angles are radians; q, p are dimensionless in [0, 1].
 */

#ifndef GHZW_H
#define GHZW_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ghzw_status {
  GHZW_OK = 0,
  GHZW_ERR_ARGUMENT = 2,  /* invalid or out-of-range input */
  GHZW_ERR_NUMERICAL = 3, /* iteration or residual contract violated */
  GHZW_ERR_INTERNAL = 4
} ghzw_status;

typedef enum ghzw_measure {
  GHZW_MEASURE_TANGLE = 0,
  GHZW_MEASURE_PI = 1
} ghzw_measure;

/* Winning branch of the piecewise roof formula. */
#define GHZW_BRANCH_OPT3 3
#define GHZW_BRANCH_OPT40 40
#define GHZW_BRANCH_OPT41 41

const char* ghzw_version(void);

/* Message for the most recent failing call on this thread; empty string if
 * none. The pointer stays valid until the next failing call. */
const char* ghzw_last_error(void);

/* ---- pure family ---- */

ghzw_status ghzw_tangle_pure(double q, double theta, double* out);
ghzw_status ghzw_pi_pure(double q, double theta, double* out);
ghzw_status ghzw_measure_pure(ghzw_measure measure, double q, double theta,
                              double* out);

/* Concurrence across the one-vs-two cut (theta-independent) and negativity
 * of the two-qubit marginal. */
ghzw_status ghzw_concurrence(double q, double theta, double* out);
ghzw_status ghzw_negativity(double q, double theta, double* out);

/* ---- mixture closed forms ---- */

/* Piecewise convex-roof value at p; *branch receives GHZW_BRANCH_*. Either
 * out-pointer may be NULL if not wanted (not both). */
ghzw_status ghzw_mixed_value(ghzw_measure measure, double p, double* value,
                             int* branch);

ghzw_status ghzw_critical_points(ghzw_measure measure, double* q_star0,
                                 double* q_star1, double* theta_star);

/* Analytic tangle critical points 4*2^(1/3)/(3+4*2^(1/3)) and
 * 1/2 + (3/310) sqrt(465). */
ghzw_status ghzw_tangle_critical_analytic(double* q_star0, double* q_star1);

/* ---- decompositions ---- */

typedef struct ghzw_ensemble ghzw_ensemble;

/* The optimal decomposition behind the roof value at p: a phase triple,
 * optionally with a W or GHZ vertex. Free with ghzw_ensemble_free. */
ghzw_status ghzw_build_decomposition(ghzw_measure measure, double p,
                                     ghzw_ensemble** out);

/* Builds an ensemble from parallel arrays (n entries, 1 <= n <= 4; weights
 * nonnegative, summing to 1 within 1e-10). */
ghzw_status ghzw_ensemble_new(const double* weights, const double* qs,
                              const double* thetas, size_t n,
                              ghzw_ensemble** out);

size_t ghzw_ensemble_size(const ghzw_ensemble* e);
ghzw_status ghzw_ensemble_entry(const ghzw_ensemble* e, size_t index,
                                double* weight, double* q, double* theta);

/* residual: max-norm gap between the ensemble's density matrix and the
 * mixture at p. spread: max - min of weight*E over non-vertex entries. */
ghzw_status ghzw_ensemble_check(const ghzw_ensemble* e, ghzw_measure measure,
                                double p, double* residual, double* spread);

void ghzw_ensemble_free(ghzw_ensemble* e);

/* ---- decomposition-search oracle ---- */

typedef struct ghzw_search ghzw_search;

/* Derivative-free minimization of the average entanglement over n_states
 * (2..4) decompositions of the mixture at p; deterministic per seed. Free
 * with ghzw_search_free. */
ghzw_status ghzw_oracle_search(ghzw_measure measure, double p, int n_states,
                               int restarts, uint64_t seed, ghzw_search** out);

double ghzw_search_value(const ghzw_search* s);
int ghzw_search_restarts_used(const ghzw_search* s);
int ghzw_search_converged(const ghzw_search* s);

/* Borrowed pointer, valid while s lives. */
const ghzw_ensemble* ghzw_search_ensemble(const ghzw_search* s);

void ghzw_search_free(ghzw_search* s);

/* ---- invariant suite ---- */

typedef struct ghzw_report ghzw_report;

/* Runs all invariant groups (periodicity, dominance, reconstruction,
 * gradients, closed-form quartic residuals). Free with ghzw_report_free. */
ghzw_status ghzw_verify_run(ghzw_report** out);

size_t ghzw_report_size(const ghzw_report* r);
ghzw_status ghzw_report_group(const ghzw_report* r, size_t index,
                              const char** name, int* passed,
                              const char** detail);
int ghzw_report_all_passed(const ghzw_report* r);
void ghzw_report_free(ghzw_report* r);

#ifdef __cplusplus
}
#endif

#endif /* GHZW_H */
