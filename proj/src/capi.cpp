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

#include "dampsearch/dampsearch.h"

#include <algorithm>
#include <cmath>
#include <new>
#include <string>

#include "dampsearch/blochmap.hpp"
#include "dampsearch/cost.hpp"
#include "dampsearch/error.hpp"
#include "dampsearch/fullsim.hpp"
#include "dampsearch/lindblad.hpp"
#include "dampsearch/spectral.hpp"

struct dampsearch_space {
  dampsearch::SearchSpace space;
};

struct dampsearch_fullstate {
  dampsearch::FullState state;
};

namespace {

using dampsearch::ErrorCode;

thread_local std::string g_last_error;

struct BufferTooSmall {
  std::string what;
};

dampsearch_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return DAMPSEARCH_ERR_INVALID_ARGUMENT;
    case ErrorCode::kInvariantViolation: return DAMPSEARCH_ERR_INVARIANT;
    case ErrorCode::kNoConvergence: return DAMPSEARCH_ERR_NO_CONVERGENCE;
    case ErrorCode::kNoSignChange: return DAMPSEARCH_ERR_NO_SIGN_CHANGE;
    case ErrorCode::kIo: return DAMPSEARCH_ERR_IO;
  }
  return DAMPSEARCH_ERR_INTERNAL;
}

template <typename F>
dampsearch_status guarded(F&& body) noexcept {
  try {
    body();
    return DAMPSEARCH_OK;
  } catch (const dampsearch::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const BufferTooSmall& e) {
    g_last_error = e.what;
    return DAMPSEARCH_ERR_BUFFER_TOO_SMALL;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DAMPSEARCH_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DAMPSEARCH_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return DAMPSEARCH_ERR_INTERNAL;
  }
}

template <typename... Ptrs>
void require(const Ptrs*... ptrs) {
  if (((ptrs == nullptr) || ...)) {
    dampsearch::fail(ErrorCode::kInvalidArgument, "null pointer argument");
  }
}

void require_capacity(std::size_t have, std::size_t need) {
  if (have < need) {
    throw BufferTooSmall{"output buffer holds " + std::to_string(have) +
                         " elements, need " + std::to_string(need)};
  }
}

dampsearch_bloch to_c(const dampsearch::BlochState& s) { return {s.x, s.z, s.t}; }
dampsearch::BlochState from_c(const dampsearch_bloch& s) { return {s.x, s.z, s.t}; }

dampsearch_eigen_triple to_c(const dampsearch::EigenTriple& e) {
  dampsearch_eigen_triple out;
  for (int k = 0; k < 3; ++k) {
    out.re[k] = e.values[k].real();
    out.im[k] = e.values[k].imag();
  }
  return out;
}

dampsearch_cost to_c(const dampsearch::CostResult& r) {
  return {r.expected_calls, r.best_r.value_or(0), r.flip_mass, r.survival,
          r.verify_success, r.horizon,           r.tail_error};
}

void copy_matrix(const dampsearch::Matrix3& m, double out[9]) {
  std::copy(m.a.begin(), m.a.end(), out);
}

}  // namespace

extern "C" {

const char* dampsearch_last_error(void) { return g_last_error.c_str(); }

const char* dampsearch_status_string(dampsearch_status status) {
  switch (status) {
    case DAMPSEARCH_OK: return "ok";
    case DAMPSEARCH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DAMPSEARCH_ERR_INVARIANT: return "invariant violation";
    case DAMPSEARCH_ERR_NO_CONVERGENCE: return "no convergence";
    case DAMPSEARCH_ERR_NO_SIGN_CHANGE: return "no sign change";
    case DAMPSEARCH_ERR_IO: return "i/o error";
    case DAMPSEARCH_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case DAMPSEARCH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

dampsearch_status dampsearch_space_create(int64_t n, int64_t m,
                                          dampsearch_space** out) {
  return guarded([&] {
    require(out);
    *out = new dampsearch_space{dampsearch::SearchSpace(n, m)};
  });
}

void dampsearch_space_destroy(dampsearch_space* space) { delete space; }

int64_t dampsearch_space_n(const dampsearch_space* space) {
  return space ? space->space.n() : 0;
}

int64_t dampsearch_space_m(const dampsearch_space* space) {
  return space ? space->space.m() : 0;
}

double dampsearch_space_theta(const dampsearch_space* space) {
  return space ? space->space.theta() : 0.0;
}

dampsearch_status dampsearch_initial_state(const dampsearch_space* space,
                                           dampsearch_bloch* out) {
  return guarded([&] {
    require(space, out);
    *out = to_c(dampsearch::initial_state(space->space));
  });
}

dampsearch_status dampsearch_damped_map(double theta, double phi, double out[9]) {
  return guarded([&] {
    require(out);
    copy_matrix(dampsearch::damped_map(theta, phi).entries, out);
  });
}

dampsearch_status dampsearch_kraus_step(const dampsearch_bloch* state,
                                        double theta, double phi,
                                        dampsearch_bloch* out, double* flip_prob) {
  return guarded([&] {
    require(state, out, flip_prob);
    const auto r = dampsearch::kraus_step(from_c(*state), theta, phi);
    *out = to_c(r.state);
    *flip_prob = r.flip_prob;
  });
}

dampsearch_status dampsearch_trajectory(const dampsearch_space* space,
                                        const double* phis, size_t phis_len,
                                        size_t steps, dampsearch_bloch* out,
                                        size_t out_len) {
  return guarded([&] {
    require(space, phis, out);
    require_capacity(out_len, steps + 1);
    const auto states = dampsearch::trajectory(space->space, {phis, phis_len}, steps);
    std::transform(states.begin(), states.end(), out,
                   [](const auto& s) { return to_c(s); });
  });
}

dampsearch_status dampsearch_eigenvalues(double theta, double phi,
                                         dampsearch_eigen_triple* out) {
  return guarded([&] {
    require(out);
    *out = to_c(dampsearch::eigenvalues(dampsearch::damped_map(theta, phi)));
  });
}

dampsearch_status dampsearch_critical_phi_closed(double theta, double* out) {
  return guarded([&] {
    require(out);
    *out = dampsearch::critical_phi_closed(theta);
  });
}

dampsearch_status dampsearch_critical_phi_numeric(double theta, double* out) {
  return guarded([&] {
    require(out);
    *out = dampsearch::critical_phi_numeric(theta);
  });
}

dampsearch_status dampsearch_eigencurve(double theta, const double* phi_grid,
                                        size_t grid_len,
                                        dampsearch_eigen_triple* out) {
  return guarded([&] {
    require(phi_grid, out);
    const auto rows = dampsearch::eigencurve(theta, {phi_grid, grid_len});
    std::transform(rows.begin(), rows.end(), out,
                   [](const auto& row) { return to_c(row.eig); });
  });
}

double dampsearch_grover_success_prob(double theta, int64_t r) {
  return dampsearch::grover_success_prob(theta, r);
}

dampsearch_status dampsearch_undamped_expected_calls(const dampsearch_space* space,
                                                     dampsearch_cost* out) {
  return guarded([&] {
    require(space, out);
    *out = to_c(dampsearch::undamped_expected_calls(space->space));
  });
}

dampsearch_status dampsearch_damped_expected_calls_fixed(
    const dampsearch_space* space, double phi, dampsearch_cost* out) {
  return guarded([&] {
    require(space, out);
    *out = to_c(dampsearch::damped_expected_calls_fixed(space->space, phi));
  });
}

dampsearch_status dampsearch_schedule_phi(int64_t n, double* out) {
  return guarded([&] {
    require(out);
    *out = dampsearch::schedule_phi(n);
  });
}

dampsearch_status dampsearch_schedule_expected_calls(const dampsearch_space* space,
                                                     dampsearch_schedule_fn schedule,
                                                     void* user_data, double eps,
                                                     dampsearch_cost* out) {
  return guarded([&] {
    require(space, out);
    const auto rule =
        schedule ? dampsearch::DampingSchedule(
                       [=](std::int64_t n) { return schedule(n, user_data); })
                 : dampsearch::DampingSchedule::decreasing();
    *out = to_c(dampsearch::schedule_expected_calls(space->space, rule, eps));
  });
}

dampsearch_status dampsearch_fullstate_create(int64_t n, const int64_t* targets,
                                              size_t m, dampsearch_fullstate** out) {
  return guarded([&] {
    require(out);
    if (m > 0) require(targets);
    *out = new dampsearch_fullstate{dampsearch::FullState::initial(n, {targets, m})};
  });
}

dampsearch_status dampsearch_fullstate_create_seeded(int64_t n, int64_t m,
                                                     uint64_t seed,
                                                     dampsearch_fullstate** out) {
  return guarded([&] {
    require(out);
    *out = new dampsearch_fullstate{dampsearch::FullState::initial_seeded(n, m, seed)};
  });
}

dampsearch_status dampsearch_fullstate_clone(const dampsearch_fullstate* state,
                                             dampsearch_fullstate** out) {
  return guarded([&] {
    require(state, out);
    *out = new dampsearch_fullstate{state->state};
  });
}

void dampsearch_fullstate_destroy(dampsearch_fullstate* state) { delete state; }

dampsearch_status dampsearch_fullstate_apply_oracle(dampsearch_fullstate* state) {
  return guarded([&] {
    require(state);
    state->state.apply_oracle();
  });
}

dampsearch_status dampsearch_fullstate_apply_diffusion(dampsearch_fullstate* state) {
  return guarded([&] {
    require(state);
    state->state.apply_diffusion();
  });
}

dampsearch_status dampsearch_fullstate_apply_u(dampsearch_fullstate* state,
                                               double phi) {
  return guarded([&] {
    require(state);
    state->state.apply_u(phi);
  });
}

dampsearch_status dampsearch_fullstate_apply_u_factored(dampsearch_fullstate* state,
                                                        double phi) {
  return guarded([&] {
    require(state);
    state->state.apply_u_factored(phi);
  });
}

dampsearch_status dampsearch_fullstate_measure_ancilla(dampsearch_fullstate* state,
                                                       double* flip_prob) {
  return guarded([&] {
    require(state, flip_prob);
    *flip_prob = state->state.measure_ancilla();
  });
}

dampsearch_status dampsearch_fullstate_reduced_bloch(const dampsearch_fullstate* state,
                                                     dampsearch_bloch* out,
                                                     double* y, double* residual) {
  return guarded([&] {
    require(state, out);
    const auto checked = state->state.reduced_bloch();
    const auto reduced = state->state.reduce();
    if (y) *y = reduced.y;
    if (residual) *residual = reduced.residual;
    *out = to_c(checked);
  });
}

dampsearch_status dampsearch_fullstate_verify_flip_certainty(
    const dampsearch_fullstate* state, int* out) {
  return guarded([&] {
    require(state, out);
    *out = state->state.verify_flip_certainty() ? 1 : 0;
  });
}

dampsearch_status dampsearch_fullstate_amplitudes(const dampsearch_fullstate* state,
                                                  double* re, double* im,
                                                  size_t len) {
  return guarded([&] {
    require(state, re, im);
    const auto amps = state->state.amplitudes();
    require_capacity(len, amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
      re[i] = amps[i].real();
      im[i] = amps[i].imag();
    }
  });
}

dampsearch_status dampsearch_lindblad_generator(double c, double out[9]) {
  return guarded([&] {
    require(out);
    copy_matrix(dampsearch::generator_matrix({c}), out);
  });
}

dampsearch_status dampsearch_lindblad_step_count(double total_time, double dt,
                                                 size_t* out) {
  return guarded([&] {
    require(out);
    if (!(dt > 0.0) || !(total_time >= dt)) {
      dampsearch::fail(ErrorCode::kInvalidArgument,
                       "integration needs dt > 0 and total_time >= dt");
    }
    *out = static_cast<size_t>(std::ceil(total_time / dt - 1e-9)) + 1;
  });
}

dampsearch_status dampsearch_lindblad_integrate(const dampsearch_bloch* state0,
                                                double c, double total_time,
                                                double dt, dampsearch_bloch* out,
                                                size_t out_len) {
  return guarded([&] {
    require(state0, out);
    const auto states = dampsearch::integrate(from_c(*state0), {c}, total_time, dt);
    require_capacity(out_len, states.size());
    std::transform(states.begin(), states.end(), out,
                   [](const auto& s) { return to_c(s); });
  });
}

dampsearch_status dampsearch_lindblad_exact(const dampsearch_bloch* state0,
                                            double c, double total_time,
                                            dampsearch_bloch* out) {
  return guarded([&] {
    require(state0, out);
    *out = to_c(dampsearch::propagate_exact(from_c(*state0), {c}, total_time));
  });
}

dampsearch_status dampsearch_lindblad_critical(double c_max, double* out) {
  return guarded([&] {
    require(out);
    *out = dampsearch::continuous_critical(c_max);
  });
}

dampsearch_status dampsearch_lindblad_eigenvalues(double c,
                                                  dampsearch_eigen_triple* out) {
  return guarded([&] {
    require(out);
    *out = to_c(dampsearch::eigenvalues(dampsearch::generator_matrix({c})));
  });
}

}  // extern "C"
