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

#include "dampsearch/fullsim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "dampsearch/error.hpp"

namespace dampsearch {

FullState::FullState(std::int64_t n, std::vector<std::int64_t> targets)
    : n_(n), targets_(std::move(targets)) {
  if (n < 2) fail(ErrorCode::kInvalidArgument, "register needs at least 2 items");
  if (targets_.empty() || static_cast<std::int64_t>(targets_.size()) >= n) {
    fail(ErrorCode::kInvalidArgument,
         "target set must be non-empty and smaller than the register");
  }
  std::sort(targets_.begin(), targets_.end());
  if (std::adjacent_find(targets_.begin(), targets_.end()) != targets_.end()) {
    fail(ErrorCode::kInvalidArgument, "duplicate target item");
  }
  if (targets_.front() < 0 || targets_.back() >= n) {
    fail(ErrorCode::kInvalidArgument, "target item out of range");
  }
  marked_.assign(static_cast<std::size_t>(n), 0);
  for (std::int64_t s : targets_) marked_[s] = 1;
  amp_.assign(2 * static_cast<std::size_t>(n), {0.0, 0.0});
}

FullState FullState::initial(std::int64_t n, std::span<const std::int64_t> targets) {
  FullState state(n, {targets.begin(), targets.end()});
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::int64_t s = 0; s < n; ++s) state.set_amplitude(s, Ancilla::kDown, a);
  return state;
}

FullState FullState::initial_seeded(std::int64_t n, std::int64_t m,
                                    std::uint64_t seed) {
  if (n < 2 || m < 1 || m >= n) {
    fail(ErrorCode::kInvalidArgument, "need n >= 2 and 1 <= m < n");
  }
  std::vector<std::int64_t> items(static_cast<std::size_t>(n));
  std::iota(items.begin(), items.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::int64_t i = 0; i < m; ++i) {
    std::uniform_int_distribution<std::int64_t> pick(i, n - 1);
    std::swap(items[i], items[pick(rng)]);
  }
  items.resize(static_cast<std::size_t>(m));
  return initial(n, items);
}

FullState FullState::basis(std::int64_t n, std::span<const std::int64_t> targets,
                           std::int64_t item, Ancilla ancilla) {
  FullState state(n, {targets.begin(), targets.end()});
  if (item < 0 || item >= n) fail(ErrorCode::kInvalidArgument, "item out of range");
  state.set_amplitude(item, ancilla, 1.0);
  return state;
}

double FullState::norm_squared() const {
  double sum = 0.0;
  for (const auto& v : amp_) sum += std::norm(v);
  return sum;
}

double FullState::branch_norm_squared(Ancilla a) const {
  double sum = 0.0;
  for (std::int64_t s = 0; s < n_; ++s) sum += std::norm(amp_[index(s, a)]);
  return sum;
}

void FullState::oracle_on(Ancilla a) {
  for (std::int64_t s : targets_) amp_[index(s, a)] = -amp_[index(s, a)];
}

void FullState::diffusion_on(Ancilla a) {
  std::complex<double> sum{0.0, 0.0};
  for (std::int64_t s = 0; s < n_; ++s) sum += amp_[index(s, a)];
  const std::complex<double> twice_mean = 2.0 * sum / static_cast<double>(n_);
  for (std::int64_t s = 0; s < n_; ++s) {
    amp_[index(s, a)] = twice_mean - amp_[index(s, a)];
  }
}

void FullState::rotate_ancilla(std::int64_t item, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  auto& up = amp_[index(item, Ancilla::kUp)];
  auto& down = amp_[index(item, Ancilla::kDown)];
  const std::complex<double> new_up = c * up - s * down;
  const std::complex<double> new_down = s * up + c * down;
  up = new_up;
  down = new_down;
}

void FullState::apply_oracle() {
  oracle_on(Ancilla::kDown);
  oracle_on(Ancilla::kUp);
}

void FullState::apply_diffusion() {
  diffusion_on(Ancilla::kDown);
  diffusion_on(Ancilla::kUp);
}

void FullState::apply_u(double phi) {
  for (std::int64_t s : targets_) rotate_ancilla(s, phi);
  // G = E Z on the unflipped branch only.
  oracle_on(Ancilla::kDown);
  diffusion_on(Ancilla::kDown);
}

void FullState::apply_u_factored(double phi) {
  for (std::int64_t s = 0; s < n_; ++s) rotate_ancilla(s, phi / 2.0);
  oracle_on(Ancilla::kDown);
  for (std::int64_t s = 0; s < n_; ++s) rotate_ancilla(s, -phi / 2.0);
  diffusion_on(Ancilla::kDown);
}

double FullState::measure_ancilla() {
  const double total = norm_squared();
  const double up = branch_norm_squared(Ancilla::kUp);
  for (std::int64_t s = 0; s < n_; ++s) amp_[index(s, Ancilla::kUp)] = 0.0;
  return total > 0.0 ? up / total : 0.0;
}

ReducedState FullState::reduce() const {
  const double n_good = static_cast<double>(m());
  const double n_bad = static_cast<double>(n_) - n_good;
  std::complex<double> sum_alpha{0.0, 0.0};
  std::complex<double> sum_beta{0.0, 0.0};
  for (std::int64_t s = 0; s < n_; ++s) {
    (is_target(s) ? sum_beta : sum_alpha) += amp_[index(s, Ancilla::kDown)];
  }
  // Components along |alpha> and |beta>.
  const std::complex<double> a = sum_alpha / std::sqrt(n_bad);
  const std::complex<double> b = sum_beta / std::sqrt(n_good);

  const std::complex<double> on_alpha = a / std::sqrt(n_bad);
  const std::complex<double> on_beta = b / std::sqrt(n_good);
  double outside = 0.0;
  for (std::int64_t s = 0; s < n_; ++s) {
    outside += std::norm(amp_[index(s, Ancilla::kDown)] -
                         (is_target(s) ? on_beta : on_alpha));
  }

  const std::complex<double> coherence = std::conj(a) * b;
  ReducedState out;
  out.bloch = {2.0 * coherence.real(), std::norm(a) - std::norm(b),
               std::norm(a) + std::norm(b)};
  out.y = 2.0 * coherence.imag();
  out.residual = std::sqrt(outside);
  return out;
}

BlochState FullState::reduced_bloch() const {
  const ReducedState r = reduce();
  if (r.residual > 1e-10) {
    fail(ErrorCode::kInvariantViolation,
         "unflipped branch leaves span{alpha, beta} (residual " +
             std::to_string(r.residual) + ")");
  }
  return r.bloch;
}

bool FullState::verify_flip_certainty(double tol) const {
  double stray = 0.0;
  for (std::int64_t s = 0; s < n_; ++s) {
    if (!is_target(s)) stray += std::norm(amp_[index(s, Ancilla::kUp)]);
  }
  return std::sqrt(stray) <= tol;
}

}  // namespace dampsearch
