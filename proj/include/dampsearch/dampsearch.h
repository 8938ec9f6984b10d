// Copyright 2026 The dampsearch Authors
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

/* C interface to the damped Grover search toolkit.
 *
 * Every fallible function returns a dampsearch_status. On failure the
 * message of the most recent error on the calling thread is available from
 * dampsearch_last_error(). Output pointers are left untouched on failure.
 *
 * Bloch states are (x, z, t) = (Tr rho X, Tr rho Z, Tr rho) of the branch in
 * which the ancilla has not flipped. Matrices are 3x3, row-major. Items are
 * 0-based.
 */

#ifndef DAMPSEARCH_H
#define DAMPSEARCH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DAMPSEARCH_BUILDING)
#    define DAMPSEARCH_API __declspec(dllexport)
#  else
#    define DAMPSEARCH_API __declspec(dllimport)
#  endif
#else
#  define DAMPSEARCH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dampsearch_status {
  DAMPSEARCH_OK = 0,
  DAMPSEARCH_ERR_INVALID_ARGUMENT = 1,
  DAMPSEARCH_ERR_INVARIANT = 2,
  DAMPSEARCH_ERR_NO_CONVERGENCE = 3,
  DAMPSEARCH_ERR_NO_SIGN_CHANGE = 4,
  DAMPSEARCH_ERR_IO = 5,
  DAMPSEARCH_ERR_BUFFER_TOO_SMALL = 6,
  DAMPSEARCH_ERR_INTERNAL = 7
} dampsearch_status;

typedef struct dampsearch_space dampsearch_space;
typedef struct dampsearch_fullstate dampsearch_fullstate;

typedef struct dampsearch_bloch {
  double x;
  double z;
  double t;
} dampsearch_bloch;

/* Eigenvalue k is re[k] + i im[k]. */
typedef struct dampsearch_eigen_triple {
  double re[3];
  double im[3];
} dampsearch_eigen_triple;

typedef struct dampsearch_cost {
  double expected_calls;
  int64_t best_r; /* 0 when not applicable (schedule costs) */
  double flip_mass;
  double survival;
  double verify_success;
  int64_t horizon;
  double tail_error;
} dampsearch_cost;

/* Damping angle for iteration n >= 1. */
typedef double (*dampsearch_schedule_fn)(int64_t n, void* user_data);

DAMPSEARCH_API const char* dampsearch_last_error(void);
DAMPSEARCH_API const char* dampsearch_status_string(dampsearch_status status);

/* Search space */
DAMPSEARCH_API dampsearch_status dampsearch_space_create(int64_t n, int64_t m,
                                                         dampsearch_space** out);
DAMPSEARCH_API void dampsearch_space_destroy(dampsearch_space* space);
DAMPSEARCH_API int64_t dampsearch_space_n(const dampsearch_space* space);
DAMPSEARCH_API int64_t dampsearch_space_m(const dampsearch_space* space);
DAMPSEARCH_API double dampsearch_space_theta(const dampsearch_space* space);

/* Reduced map */
DAMPSEARCH_API dampsearch_status dampsearch_initial_state(
    const dampsearch_space* space, dampsearch_bloch* out);
DAMPSEARCH_API dampsearch_status dampsearch_damped_map(double theta, double phi,
                                                       double out[9]);
DAMPSEARCH_API dampsearch_status dampsearch_kraus_step(
    const dampsearch_bloch* state, double theta, double phi,
    dampsearch_bloch* out, double* flip_prob);
/* Writes steps + 1 states. phis_len is 1 (repeated) or >= steps. */
DAMPSEARCH_API dampsearch_status dampsearch_trajectory(
    const dampsearch_space* space, const double* phis, size_t phis_len,
    size_t steps, dampsearch_bloch* out, size_t out_len);

/* Spectral analysis */
DAMPSEARCH_API dampsearch_status dampsearch_eigenvalues(
    double theta, double phi, dampsearch_eigen_triple* out);
DAMPSEARCH_API dampsearch_status dampsearch_critical_phi_closed(double theta,
                                                                double* out);
DAMPSEARCH_API dampsearch_status dampsearch_critical_phi_numeric(double theta,
                                                                 double* out);
/* out must hold grid_len triples; rows follow continuous eigenvalue curves. */
DAMPSEARCH_API dampsearch_status dampsearch_eigencurve(
    double theta, const double* phi_grid, size_t grid_len,
    dampsearch_eigen_triple* out);

/* Oracle-call costs */
DAMPSEARCH_API double dampsearch_grover_success_prob(double theta, int64_t r);
DAMPSEARCH_API dampsearch_status dampsearch_undamped_expected_calls(
    const dampsearch_space* space, dampsearch_cost* out);
DAMPSEARCH_API dampsearch_status dampsearch_damped_expected_calls_fixed(
    const dampsearch_space* space, double phi, dampsearch_cost* out);
DAMPSEARCH_API dampsearch_status dampsearch_schedule_phi(int64_t n, double* out);
/* schedule == NULL selects the decreasing schedule. */
DAMPSEARCH_API dampsearch_status dampsearch_schedule_expected_calls(
    const dampsearch_space* space, dampsearch_schedule_fn schedule,
    void* user_data, double eps, dampsearch_cost* out);

/* Full state-vector simulation */
DAMPSEARCH_API dampsearch_status dampsearch_fullstate_create(
    int64_t n, const int64_t* targets, size_t m, dampsearch_fullstate** out);
DAMPSEARCH_API dampsearch_status dampsearch_fullstate_create_seeded(
    int64_t n, int64_t m, uint64_t seed, dampsearch_fullstate** out);
DAMPSEARCH_API dampsearch_status dampsearch_fullstate_clone(
    const dampsearch_fullstate* state, dampsearch_fullstate** out);
DAMPSEARCH_API void dampsearch_fullstate_destroy(dampsearch_fullstate* state);
DAMPSEARCH_API dampsearch_status dampsearch_fullstate_apply_oracle(
    dampsearch_fullstate* state);
DAMPSEARCH_API dampsearch_status dampsearch_fullstate_apply_diffusion(
    dampsearch_fullstate* state);
DAMPSEARCH_API dampsearch_status dampsearch_fullstate_apply_u(
    dampsearch_fullstate* state, double phi);
DAMPSEARCH_API dampsearch_status dampsearch_fullstate_apply_u_factored(
    dampsearch_fullstate* state, double phi);
DAMPSEARCH_API dampsearch_status dampsearch_fullstate_measure_ancilla(
    dampsearch_fullstate* state, double* flip_prob);
/* y and residual may be NULL. Fails with DAMPSEARCH_ERR_INVARIANT when the
 * out-of-span residual exceeds 1e-10. */
DAMPSEARCH_API dampsearch_status dampsearch_fullstate_reduced_bloch(
    const dampsearch_fullstate* state, dampsearch_bloch* out, double* y,
    double* residual);
DAMPSEARCH_API dampsearch_status dampsearch_fullstate_verify_flip_certainty(
    const dampsearch_fullstate* state, int* out);
/* Copies the 2n amplitudes (index 2*item + ancilla, ancilla 0 = down). */
DAMPSEARCH_API dampsearch_status dampsearch_fullstate_amplitudes(
    const dampsearch_fullstate* state, double* re, double* im, size_t len);

/* Continuous-time limit */
DAMPSEARCH_API dampsearch_status dampsearch_lindblad_generator(double c,
                                                               double out[9]);
/* Number of states produced by dampsearch_lindblad_integrate. */
DAMPSEARCH_API dampsearch_status dampsearch_lindblad_step_count(
    double total_time, double dt, size_t* out);
DAMPSEARCH_API dampsearch_status dampsearch_lindblad_integrate(
    const dampsearch_bloch* state0, double c, double total_time, double dt,
    dampsearch_bloch* out, size_t out_len);
DAMPSEARCH_API dampsearch_status dampsearch_lindblad_exact(
    const dampsearch_bloch* state0, double c, double total_time,
    dampsearch_bloch* out);
DAMPSEARCH_API dampsearch_status dampsearch_lindblad_critical(double c_max,
                                                              double* out);
DAMPSEARCH_API dampsearch_status dampsearch_lindblad_eigenvalues(
    double c, dampsearch_eigen_triple* out);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* DAMPSEARCH_H */
