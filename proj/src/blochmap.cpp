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

#include "dampsearch/blochmap.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dampsearch/error.hpp"

namespace dampsearch {

SearchSpace::SearchSpace(std::int64_t n, std::int64_t m) : n_(n), m_(m) {
  if (n < 2 || m < 1 || m >= n) {
    fail(ErrorCode::kInvalidArgument,
         "search space needs n >= 2 and 1 <= m < n (got n=" +
             std::to_string(n) + ", m=" + std::to_string(m) + ")");
  }
  theta_ = 2.0 * std::asin(std::sqrt(static_cast<double>(m) / static_cast<double>(n)));
}

double SearchSpace::sin_theta() const {
  const double n = static_cast<double>(n_);
  const double m = static_cast<double>(m_);
  return 2.0 * std::sqrt(m * (n - m)) / n;
}

bool BlochState::is_physical(double tol) const {
  if (!(t >= -tol && t <= 1.0 + tol)) return false;
  if (x * x + z * z > t * t * (1.0 + tol) + tol * tol) return false;
  return t - z >= -tol;
}

BlochState initial_state(const SearchSpace& space) {
  return {std::sin(space.theta()), std::cos(space.theta()), 1.0};
}

DampedMap damped_map(double theta, double phi) {
  if (!(phi >= 0.0 && phi <= std::numbers::pi / 2)) {
    fail(ErrorCode::kInvalidArgument,
         "damping angle must lie in [0, pi/2] (got " + std::to_string(phi) + ")");
  }
  const double c = std::cos(phi);
  const double keep = (1.0 + c * c) / 2.0;
  const double leak = (1.0 - c * c) / 2.0;
  const double s2 = std::sin(2.0 * theta);
  const double c2 = std::cos(2.0 * theta);

  DampedMap map;
  map.theta = theta;
  map.phi = phi;
  map.entries.a = {c2 * c,  s2 * keep, s2 * leak,
                   -s2 * c, c2 * keep, c2 * leak,
                   0.0,     leak,      keep};
  return map;
}

Matrix3 undamped_map(double theta) {
  const double s2 = std::sin(2.0 * theta);
  const double c2 = std::cos(2.0 * theta);
  Matrix3 m;
  m.a = {c2, s2, 0.0, -s2, c2, 0.0, 0.0, 0.0, 1.0};
  return m;
}

namespace {

// Real symmetric 2x2 density matrix in the {alpha, beta} basis.
struct Density2 {
  double aa, ab, bb;
};

}  // namespace

KrausResult kraus_step(const BlochState& state, double theta, double phi) {
  // rho = (t I + x X + z Z) / 2 with X = |b><a| + |a><b|, Z = |a><a| - |b><b|.
  const Density2 rho{0.5 * (state.t + state.z), 0.5 * state.x,
                     0.5 * (state.t - state.z)};

  // K = diag(1, cos phi): amplitude left behind in the unflipped branch.
  const double k = std::cos(phi);
  const Density2 damped{rho.aa, k * rho.ab, k * k * rho.bb};

  // G = exp(-i theta Y) = [[cos, -sin], [sin, cos]]; rho' = G rho G^T.
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double g00 = c, g01 = -s, g10 = s, g11 = c;
  const double r00 = g00 * g00 * damped.aa + 2.0 * g00 * g01 * damped.ab +
                     g01 * g01 * damped.bb;
  const double r01 = g00 * g10 * damped.aa + (g00 * g11 + g01 * g10) * damped.ab +
                     g01 * g11 * damped.bb;
  const double r11 = g10 * g10 * damped.aa + 2.0 * g10 * g11 * damped.ab +
                     g11 * g11 * damped.bb;

  KrausResult out;
  out.state = {2.0 * r01, r00 - r11, r00 + r11};
  const double sphi = std::sin(phi);
  out.flip_prob = sphi * sphi * rho.bb;
  return out;
}

std::vector<BlochState> trajectory(const SearchSpace& space,
                                   std::span<const double> phis,
                                   std::size_t steps) {
  if (phis.empty() || (phis.size() != 1 && phis.size() < steps)) {
    fail(ErrorCode::kInvalidArgument,
         "trajectory needs one damping angle or one per step");
  }
  std::vector<BlochState> out;
  out.reserve(steps + 1);
  out.push_back(initial_state(space));

  const bool fixed = phis.size() == 1;
  DampedMap map = damped_map(space.theta(), phis[0]);
  for (std::size_t k = 0; k < steps; ++k) {
    if (!fixed && k > 0) map = damped_map(space.theta(), phis[k]);
    out.push_back(map.apply(out.back()));
  }
  return out;
}

}  // namespace dampsearch
