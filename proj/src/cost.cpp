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

#include "dampsearch/cost.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dampsearch/error.hpp"

namespace dampsearch {

namespace {

constexpr std::int64_t kMaxRestartLength = 1'000'000;
constexpr std::int64_t kMaxScheduleIterations = 10'000'000;
// Rounding slack on the restart denominator before it counts as negative.
constexpr double kDenominatorSlack = 1e-12;

// Running quantities of one attempt of the restart strategy.
struct Attempt {
  double weighted_flips = 0.0;  // sum_{r<=R} r q_r
  double flip_mass = 0.0;       // sum_{r<=R} q_r
  BlochState state;

  void advance(const DampedMap& map, std::int64_t r) {
    const BlochState next = map.apply(state);
    const double q = state.t - next.t;
    weighted_flips += static_cast<double>(r) * q;
    flip_mass += q;
    state = next;
  }

  // Expected calls for restart length r; +inf when a verification can
  // never succeed.
  double cost(std::int64_t r) const {
    const double restart = 0.5 * (state.t + state.z);
    const double denom = 1.0 - restart;
    if (denom < -kDenominatorSlack) {
      fail(ErrorCode::kInvariantViolation,
           "restart probability (t + z)/2 exceeds 1 at R=" + std::to_string(r));
    }
    if (denom <= 0.0) return std::numeric_limits<double>::infinity();
    return (weighted_flips + static_cast<double>(r + 1) * state.t) / denom;
  }
};

}  // namespace

DampingSchedule DampingSchedule::decreasing() {
  return DampingSchedule([](std::int64_t n) { return schedule_phi(n); });
}

DampingSchedule DampingSchedule::constant(double phi) {
  return DampingSchedule([phi](std::int64_t) { return phi; });
}

double grover_success_prob(double theta, std::int64_t r) {
  if (r < 0) fail(ErrorCode::kInvalidArgument, "iteration count must be >= 0");
  const double s = std::sin((2.0 * static_cast<double>(r) + 1.0) * theta / 2.0);
  return s * s;
}

std::int64_t scan_window(double theta) {
  return 3 * static_cast<std::int64_t>(std::ceil(std::numbers::pi / theta));
}

CostResult undamped_expected_calls(const SearchSpace& space) {
  const std::int64_t window = scan_window(space.theta());
  CostResult best;
  best.expected_calls = std::numeric_limits<double>::infinity();
  best.survival = 1.0;
  std::int64_t stale = 0;
  for (std::int64_t r = 1; r <= kMaxRestartLength && stale < window; ++r) {
    const double p = grover_success_prob(space.theta(), r);
    const double e = p > 0.0 ? static_cast<double>(r + 1) / p
                             : std::numeric_limits<double>::infinity();
    if (e < best.expected_calls) {
      best.expected_calls = e;
      best.best_r = r;
      best.verify_success = p;
      stale = 0;
    } else {
      ++stale;
    }
  }
  return best;
}

double restart_cost(const SearchSpace& space, double phi, std::int64_t r) {
  if (r < 1) fail(ErrorCode::kInvalidArgument, "restart length must be >= 1");
  const DampedMap map = damped_map(space.theta(), phi);
  Attempt attempt{0.0, 0.0, initial_state(space)};
  for (std::int64_t k = 1; k <= r; ++k) attempt.advance(map, k);
  return attempt.cost(r);
}

CostResult damped_expected_calls_fixed(const SearchSpace& space, double phi) {
  const DampedMap map = damped_map(space.theta(), phi);
  const std::int64_t window = scan_window(space.theta());

  Attempt attempt{0.0, 0.0, initial_state(space)};
  CostResult best;
  best.expected_calls = std::numeric_limits<double>::infinity();
  std::int64_t stale = 0;
  for (std::int64_t r = 1; r <= kMaxRestartLength && stale < window; ++r) {
    attempt.advance(map, r);
    const double e = attempt.cost(r);
    if (e < best.expected_calls) {
      best.expected_calls = e;
      best.best_r = r;
      best.flip_mass = attempt.flip_mass;
      best.survival = attempt.state.t;
      best.verify_success =
          attempt.state.t > 0.0 ? attempt.state.target_population() / attempt.state.t
                                : 0.0;
      stale = 0;
    } else {
      ++stale;
    }
  }
  if (!best.best_r) {
    fail(ErrorCode::kInvariantViolation, "no restart length has finite cost");
  }
  return best;
}

double schedule_phi(std::int64_t n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "schedule index must be >= 1");
  if (n == 1) return std::numbers::pi / 2;
  // cos phi = (1 - s)/(1 + s) with s = sin(pi/(2n)), i.e. tan^2(phi/2) = s.
  const double s = std::sin(std::numbers::pi / (2.0 * static_cast<double>(n)));
  return 2.0 * std::atan(std::sqrt(s));
}

CostResult schedule_expected_calls(const SearchSpace& space,
                                   const DampingSchedule& schedule, double eps) {
  if (!(eps > 0.0 && eps <= 1e-6)) {
    fail(ErrorCode::kInvalidArgument, "truncation eps must lie in (0, 1e-6]");
  }
  BlochState state = initial_state(space);
  double expected = 0.0;
  double flip_mass = 0.0;
  std::int64_t n = 0;
  while (state.t > eps) {
    if (n >= kMaxScheduleIterations) {
      fail(ErrorCode::kNoConvergence,
           "survival still " + std::to_string(state.t) + " after " +
               std::to_string(n) + " iterations");
    }
    ++n;
    const BlochState next = damped_map(space.theta(), schedule(n)).apply(state);
    const double q = state.t - next.t;
    expected += static_cast<double>(n) * q;
    flip_mass += q;
    state = next;
  }
  CostResult out;
  out.expected_calls = expected;
  out.flip_mass = flip_mass;
  out.survival = state.t;
  out.horizon = n;
  out.tail_error = static_cast<double>(n) * state.t;
  return out;
}

std::vector<SurfaceRow> cost_surface(std::span<const std::int64_t> n_values,
                                     std::span<const double> phi_grid,
                                     std::int64_t m) {
  std::vector<SurfaceRow> rows;
  rows.reserve(n_values.size() * phi_grid.size());
  for (std::int64_t n : n_values) {
    const SearchSpace space(n, m);
    for (double phi : phi_grid) {
      const CostResult r = damped_expected_calls_fixed(space, phi);
      rows.push_back({n, phi, r.expected_calls, *r.best_r});
    }
  }
  return rows;
}

std::vector<RatioRow> ratio_curve(std::int64_t n,
                                  std::span<const std::int64_t> m_values,
                                  double eps) {
  std::vector<RatioRow> rows;
  rows.reserve(m_values.size());
  const DampingSchedule schedule = DampingSchedule::decreasing();
  for (std::int64_t m : m_values) {
    const SearchSpace space(n, m);
    const double scheduled = schedule_expected_calls(space, schedule, eps).expected_calls;
    const double baseline = undamped_expected_calls(space).expected_calls;
    rows.push_back({m, scheduled, baseline, scheduled / baseline});
  }
  return rows;
}

}  // namespace dampsearch
