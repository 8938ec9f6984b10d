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

#include "dampsearch/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dampsearch/error.hpp"
#include "dampsearch/spectral.hpp"

namespace dampsearch {

namespace {

void check_params(const LindbladParams& params) {
  if (!(params.c >= 0.0) || !std::isfinite(params.c)) {
    fail(ErrorCode::kInvalidArgument, "damping rate must be finite and >= 0");
  }
}

void check_state(const BlochState& s) {
  if (!std::isfinite(s.x) || !std::isfinite(s.z) || !std::isfinite(s.t)) {
    fail(ErrorCode::kInvalidArgument, "initial state must be finite");
  }
}

}  // namespace

Matrix3 generator_matrix(const LindbladParams& params) {
  check_params(params);
  const double c = params.c;
  Matrix3 g;
  g.a = {-c,   2.0, 0.0,
         -2.0, -c,  c,
         0.0,  c,   -c};
  return g;
}

std::vector<BlochState> integrate(const BlochState& state0,
                                  const LindbladParams& params,
                                  double total_time, double dt) {
  check_state(state0);
  if (!std::isfinite(total_time) || !std::isfinite(dt) || !(dt > 0.0) ||
      !(total_time >= dt)) {
    fail(ErrorCode::kInvalidArgument, "integration needs finite dt > 0 and total_time >= dt");
  }
  const Matrix3 g = generator_matrix(params);
  auto rhs = [&g](const Vector3& v) { return g * v; };
  auto axpy = [](const Vector3& v, double h, const Vector3& k) {
    return Vector3{v[0] + h * k[0], v[1] + h * k[1], v[2] + h * k[2]};
  };

  const auto steps = static_cast<std::size_t>(std::ceil(total_time / dt - 1e-9));
  std::vector<BlochState> out;
  out.reserve(steps + 1);
  out.push_back(state0);
  Vector3 v = state0.as_vector();
  for (std::size_t i = 0; i < steps; ++i) {
    const double h = std::min(dt, total_time - dt * static_cast<double>(i));
    const Vector3 k1 = rhs(v);
    const Vector3 k2 = rhs(axpy(v, h / 2.0, k1));
    const Vector3 k3 = rhs(axpy(v, h / 2.0, k2));
    const Vector3 k4 = rhs(axpy(v, h, k3));
    for (std::size_t j = 0; j < 3; ++j) {
      v[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
    out.push_back(BlochState::from_vector(v));
  }
  return out;
}

BlochState propagate_exact(const BlochState& state0, const LindbladParams& params,
                           double total_time) {
  check_state(state0);
  if (!std::isfinite(total_time)) {
    fail(ErrorCode::kInvalidArgument, "propagation time must be finite");
  }
  const Matrix3 flow = expm(total_time * generator_matrix(params));
  return BlochState::from_vector(flow * state0.as_vector());
}

double continuous_critical(double c_max, double tol) {
  if (!(c_max > 0.0) || !std::isfinite(c_max)) {
    fail(ErrorCode::kInvalidArgument, "c_max must be finite and > 0");
  }
  return locate_degeneracy(
      [](double c) { return generator_matrix({c}); }, 0.0, c_max, tol);
}

}  // namespace dampsearch
