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

#ifndef DAMPSEARCH_COST_HPP
#define DAMPSEARCH_COST_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dampsearch/blochmap.hpp"

namespace dampsearch {

// Oracle-call accounting used throughout: one call per application of the
// damped iteration, one verification call after an unflipped run of R
// iterations, nothing extra for a flip (it certifies a target). A failed
// verification restarts from the initial state.
struct CostResult {
  double expected_calls = 0.0;
  // Restart length minimizing expected_calls; empty for schedule costs.
  std::optional<std::int64_t> best_r;
  // Per-attempt flip mass sum_{r<=R} q_r (schedule: up to the horizon).
  double flip_mass = 0.0;
  // No-flip survival t after the last iteration counted.
  double survival = 0.0;
  // Probability that the post-R verification finds a target, conditioned on
  // no flip. Zero for schedule costs.
  double verify_success = 0.0;
  // Schedule costs only: truncation horizon H and tail estimate H * t_H.
  std::int64_t horizon = 0;
  double tail_error = 0.0;
};

// Maps the iteration index n >= 1 to the damping angle used in that
// iteration.
class DampingSchedule {
 public:
  using Rule = std::function<double(std::int64_t)>;

  explicit DampingSchedule(Rule rule) : rule_(std::move(rule)) {}

  // phi_1 = pi/2, cos phi_n = (1 - sin(pi/(2n))) / (1 + sin(pi/(2n))).
  static DampingSchedule decreasing();
  static DampingSchedule constant(double phi);

  double operator()(std::int64_t n) const { return rule_(n); }

 private:
  Rule rule_;
};

// sin^2((2r + 1) theta / 2).
double grover_success_prob(double theta, std::int64_t r);

// min over r >= 1 of (r + 1) / p(r) with the undamped rotation.
CostResult undamped_expected_calls(const SearchSpace& space);

// Expected calls of the restart strategy for a fixed restart length r:
//   E(R) = [sum_{r<=R} r q_r + (R + 1) t_R] / [1 - (t_R + z_R) / 2].
double restart_cost(const SearchSpace& space, double phi, std::int64_t r);

// Number of consecutive non-improving restart lengths after which the scan
// over R stops: 3 * ceil(pi / theta).
std::int64_t scan_window(double theta);

// Minimum of restart_cost over R >= 1 (smallest R on ties).
CostResult damped_expected_calls_fixed(const SearchSpace& space, double phi);

// Damping of iteration n under DampingSchedule::decreasing().
double schedule_phi(std::int64_t n);

// Iterate until the ancilla flips: E = sum_n n q_n, truncated once the
// survival drops to eps. Throws Error(kNoConvergence) past 10^7 iterations.
CostResult schedule_expected_calls(const SearchSpace& space,
                                   const DampingSchedule& schedule,
                                   double eps = 1e-12);

struct SurfaceRow {
  std::int64_t n = 0;
  double phi = 0.0;
  double expected_calls = 0.0;
  std::int64_t best_r = 0;
};

std::vector<SurfaceRow> cost_surface(std::span<const std::int64_t> n_values,
                                     std::span<const double> phi_grid,
                                     std::int64_t m);

struct RatioRow {
  std::int64_t m = 0;
  double scheduled = 0.0;
  double baseline = 0.0;
  double ratio = 0.0;
};

// Decreasing-schedule cost over the known-m undamped baseline, per m.
std::vector<RatioRow> ratio_curve(std::int64_t n,
                                  std::span<const std::int64_t> m_values,
                                  double eps = 1e-12);

}  // namespace dampsearch

#endif  // DAMPSEARCH_COST_HPP
