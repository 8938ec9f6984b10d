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

#ifndef DAMPSEARCH_BLOCHMAP_HPP
#define DAMPSEARCH_BLOCHMAP_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "dampsearch/matrix3.hpp"

namespace dampsearch {

// A database of n items of which m are targets. theta is the Grover
// rotation angle, sin(theta/2) = sqrt(m/n).
class SearchSpace {
 public:
  // Throws Error(kInvalidArgument) unless n >= 2 and 1 <= m < n.
  SearchSpace(std::int64_t n, std::int64_t m);

  std::int64_t n() const { return n_; }
  std::int64_t m() const { return m_; }
  double theta() const { return theta_; }
  // 2 sqrt(m (n - m)) / n, evaluated without going through theta.
  double sin_theta() const;

 private:
  std::int64_t n_;
  std::int64_t m_;
  double theta_;
};

inline SearchSpace make_space(std::int64_t n, std::int64_t m) {
  return SearchSpace(n, m);
}

// (Tr rho X, Tr rho Z, Tr rho) of the unflipped branch. Unnormalized: t is
// the probability that the ancilla has not flipped yet. Tr rho Y is always
// zero for the maps here and is not stored.
struct BlochState {
  double x = 0.0;
  double z = 0.0;
  double t = 1.0;

  Vector3 as_vector() const { return {x, z, t}; }
  static BlochState from_vector(const Vector3& v) { return {v[0], v[1], v[2]}; }

  // Population of the target subspace, (t - z) / 2.
  double target_population() const { return 0.5 * (t - z); }

  // 0 <= t <= 1, x^2 + z^2 <= t^2 (1 + tol), t - z >= -tol.
  bool is_physical(double tol = 1e-12) const;
};

BlochState initial_state(const SearchSpace& space);

// One damped Grover iteration acting on (x, z, t). phi = 0 is the plain
// rotation by 2 theta.
struct DampedMap {
  Matrix3 entries;
  double theta = 0.0;
  double phi = 0.0;

  BlochState apply(const BlochState& s) const {
    return BlochState::from_vector(entries * s.as_vector());
  }
};

// Throws Error(kInvalidArgument) if phi is outside [0, pi/2].
DampedMap damped_map(double theta, double phi);
// The undamped rotation, written out independently of damped_map.
Matrix3 undamped_map(double theta);

struct KrausResult {
  BlochState state;
  double flip_prob = 0.0;
};

// Same iteration computed on the 2x2 density matrix: Kraus operator
// diag(1, cos phi) on {alpha, beta} for the surviving branch, then the
// Grover rotation exp(-i theta Y).
KrausResult kraus_step(const BlochState& state, double theta, double phi);

// Element k is the state after k iterations (element 0 is initial_state).
// phis holds the damping per step; a single value is repeated.
std::vector<BlochState> trajectory(const SearchSpace& space,
                                   std::span<const double> phis,
                                   std::size_t steps);

}  // namespace dampsearch

#endif  // DAMPSEARCH_BLOCHMAP_HPP
