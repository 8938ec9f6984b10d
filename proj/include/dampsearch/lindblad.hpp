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

#ifndef DAMPSEARCH_LINDBLAD_HPP
#define DAMPSEARCH_LINDBLAD_HPP

#include <vector>

#include "dampsearch/blochmap.hpp"
#include "dampsearch/matrix3.hpp"

namespace dampsearch {

// Continuous-time limit of the damped search on the unflipped branch,
//   d rho/dt = -i[Y, rho] - C (1 - Z)/2 rho - C rho (1 - Z)/2,
// with time measured so that one Grover rotation takes time theta.
struct LindbladParams {
  double c = 0.0;
};

// Generator on (x, z, t):
//   dx/dt = 2z - c x,  dz/dt = -2x + c (t - z),  dt/dt = -c (t - z).
Matrix3 generator_matrix(const LindbladParams& params);

// Fixed-step classical RK4. Element k is the state at time min(k dt, T);
// the last step is shortened when T is not a multiple of dt.
std::vector<BlochState> integrate(const BlochState& state0,
                                  const LindbladParams& params,
                                  double total_time, double dt);

// exp(T L) applied to state0.
BlochState propagate_exact(const BlochState& state0,
                           const LindbladParams& params, double total_time);

// Damping rate in (0, c_max] where the generator's eigenvalues stop
// oscillating. Throws Error(kNoSignChange) if there is none.
double continuous_critical(double c_max, double tol = 1e-8);

}  // namespace dampsearch

#endif  // DAMPSEARCH_LINDBLAD_HPP
