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

#ifndef DAMPSEARCH_FULLSIM_HPP
#define DAMPSEARCH_FULLSIM_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "dampsearch/blochmap.hpp"

namespace dampsearch {

enum class Ancilla : int { kDown = 0, kUp = 1 };

struct ReducedState {
  BlochState bloch;
  // Tr rho Y of the unflipped branch.
  double y = 0.0;
  // Norm of the unflipped system vector outside span{alpha, beta}.
  double residual = 0.0;
};

// Dense state vector over (item, ancilla), item-major: amplitude of
// (s, a) lives at index 2 s + a with a = 0 for down and 1 for up. Items are
// 0-based. Operations act in place.
class FullState {
 public:
  // Uniform superposition on the items with the ancilla down. Throws
  // Error(kInvalidArgument) unless targets is a non-empty proper subset of
  // {0, ..., n-1} without duplicates.
  static FullState initial(std::int64_t n, std::span<const std::int64_t> targets);
  // Same, with m targets drawn pseudorandomly from seed.
  static FullState initial_seeded(std::int64_t n, std::int64_t m,
                                  std::uint64_t seed);
  // Basis vector |item, ancilla> carrying the given target set.
  static FullState basis(std::int64_t n, std::span<const std::int64_t> targets,
                         std::int64_t item, Ancilla ancilla);

  std::int64_t n() const { return n_; }
  std::int64_t m() const { return static_cast<std::int64_t>(targets_.size()); }
  const std::vector<std::int64_t>& targets() const { return targets_; }
  bool is_target(std::int64_t item) const { return marked_[item] != 0; }

  std::complex<double> amplitude(std::int64_t item, Ancilla a) const {
    return amp_[index(item, a)];
  }
  void set_amplitude(std::int64_t item, Ancilla a, std::complex<double> v) {
    amp_[index(item, a)] = v;
  }
  std::span<const std::complex<double>> amplitudes() const { return amp_; }

  double norm_squared() const;
  double branch_norm_squared(Ancilla a) const;

  // Phase flip on target items, both ancilla branches.
  void apply_oracle();
  // 2|psi0><psi0| - 1 on the item register, both ancilla branches.
  void apply_diffusion();
  // [G (1 - Sz)/2 + (1 + Sz)/2] [exp(-i phi Sy) (1 - Z)/2 + (1 + Z)/2].
  void apply_u(double phi);
  // [E (1 - Sz)/2 + (1 + Sz)/2] exp(i phi Sy/2) [Z (1 - Sz)/2 + (1 + Sz)/2]
  // exp(-i phi Sy/2), i.e. a single oracle call controlled on the ancilla.
  void apply_u_factored(double phi);

  // Projects onto the down branch without renormalizing. Returns the flip
  // probability relative to the incoming norm.
  double measure_ancilla();

  // Unchecked projection of the down branch onto {alpha, beta}.
  ReducedState reduce() const;
  // Checked: throws Error(kInvariantViolation) if residual > 1e-10.
  BlochState reduced_bloch() const;

  // True iff the up branch is supported on target items only.
  bool verify_flip_certainty(double tol = 1e-12) const;

 private:
  FullState(std::int64_t n, std::vector<std::int64_t> targets);

  static std::size_t index(std::int64_t item, Ancilla a) {
    return 2 * static_cast<std::size_t>(item) + static_cast<std::size_t>(a);
  }

  void oracle_on(Ancilla a);
  void diffusion_on(Ancilla a);
  // exp(-i angle Sy) on the ancilla of one item.
  void rotate_ancilla(std::int64_t item, double angle);

  std::int64_t n_;
  std::vector<std::int64_t> targets_;
  std::vector<unsigned char> marked_;
  std::vector<std::complex<double>> amp_;
};

}  // namespace dampsearch

#endif  // DAMPSEARCH_FULLSIM_HPP
