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


#include <doctest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "dampsearch/blochmap.hpp"
#include "dampsearch/cost.hpp"
#include "dampsearch/error.hpp"
#include "dampsearch/fullsim.hpp"
#include "random_states.hpp"

using namespace dampsearch;
using cd = std::complex<double>;

constexpr double kPi = std::numbers::pi;

namespace {

using Dense = Eigen::MatrixXcd;

// Dense operators over index 2 s + a, built straight from the definitions.
Dense item_operator(const Eigen::MatrixXd& items, bool down_only) {
  const auto n = items.rows();
  Dense out = Dense::Zero(2 * n, 2 * n);
  for (Eigen::Index s = 0; s < n; ++s) {
    for (Eigen::Index t = 0; t < n; ++t) {
      out(2 * s, 2 * t) = items(s, t);
      if (!down_only) out(2 * s + 1, 2 * t + 1) = items(s, t);
    }
    if (down_only) out(2 * s + 1, 2 * s + 1) = 1.0;
  }
  return out;
}

Eigen::MatrixXd grover(int n, const std::vector<std::int64_t>& targets) {
  Eigen::MatrixXd oracle = Eigen::MatrixXd::Identity(n, n);
  for (auto t : targets) oracle(t, t) = -1.0;
  const Eigen::MatrixXd diffusion =
      Eigen::MatrixXd::Constant(n, n, 2.0 / n) - Eigen::MatrixXd::Identity(n, n);
  return diffusion * oracle;
}

// exp(-i angle Sy) on the ancilla of the selected items; (down, up) basis.
Dense ancilla_rotation(int n, const std::vector<bool>& which, double angle) {
  Dense out = Dense::Identity(2 * n, 2 * n);
  const double c = std::cos(angle), s = std::sin(angle);
  for (int i = 0; i < n; ++i) {
    if (!which[i]) continue;
    out(2 * i, 2 * i) = c;
    out(2 * i, 2 * i + 1) = s;
    out(2 * i + 1, 2 * i) = -s;
    out(2 * i + 1, 2 * i + 1) = c;
  }
  return out;
}

Dense reference_u(int n, const std::vector<std::int64_t>& targets, double phi) {
  std::vector<bool> marked(n, false);
  for (auto t : targets) marked[t] = true;
  return item_operator(grover(n, targets), true) * ancilla_rotation(n, marked, phi);
}

Eigen::VectorXcd to_dense(const FullState& s) {
  Eigen::VectorXcd v(s.amplitudes().size());
  for (std::size_t i = 0; i < s.amplitudes().size(); ++i) v(i) = s.amplitudes()[i];
  return v;
}

FullState random_state(int n, const std::vector<std::int64_t>& targets, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  FullState s = FullState::basis(n, targets, 0, Ancilla::kDown);
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    for (Ancilla a : {Ancilla::kDown, Ancilla::kUp}) {
      const cd v(g(rng), g(rng));
      s.set_amplitude(i, a, v);
      norm += std::norm(v);
    }
  }
  for (int i = 0; i < n; ++i)
    for (Ancilla a : {Ancilla::kDown, Ancilla::kUp}) s.set_amplitude(i, a, s.amplitude(i, a) / std::sqrt(norm));
  return s;
}

}  // namespace

TEST_CASE("initial state") {
  const std::vector<std::int64_t> targets{1};
  const FullState s = FullState::initial(2, targets);
  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<cd> expected{h, 0.0, h, 0.0};
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(s.amplitudes()[i] - expected[i]) <= 1e-15);
  CHECK(s.m() == 1);
  CHECK(s.is_target(1));
  CHECK(!s.is_target(0));
}

TEST_CASE("target set validation") {
  const std::vector<std::int64_t> empty;
  const std::vector<std::int64_t> all{0, 1};
  const std::vector<std::int64_t> dup{1, 1};
  const std::vector<std::int64_t> outside{2};
  CHECK_THROWS_AS(FullState::initial(2, empty), Error);
  CHECK_THROWS_AS(FullState::initial(2, all), Error);
  CHECK_THROWS_AS(FullState::initial(3, dup), Error);
  CHECK_THROWS_AS(FullState::initial(2, outside), Error);
  CHECK_THROWS_AS(FullState::initial_seeded(5, 5, 1), Error);
}

TEST_CASE("seeded targets are deterministic and distinct") {
  const FullState a = FullState::initial_seeded(100, 7, 99);
  const FullState b = FullState::initial_seeded(100, 7, 99);
  CHECK(a.targets() == b.targets());
  std::vector<std::int64_t> t = a.targets();
  std::sort(t.begin(), t.end());
  CHECK(std::adjacent_find(t.begin(), t.end()) == t.end());
}

TEST_CASE("oracle and diffusion") {
  std::mt19937_64 rng(5);
  const std::vector<std::int64_t> targets{0, 3};
  FullState s = random_state(6, targets, rng);
  const Eigen::VectorXcd before = to_dense(s);
  s.apply_oracle();
  s.apply_oracle();
  CHECK((to_dense(s) - before).norm() <= 1e-15);

  // Uniform vector is fixed, zero-mean vectors flip sign.
  FullState u = FullState::initial(6, targets);
  u.apply_diffusion();
  CHECK((to_dense(u) - to_dense(FullState::initial(6, targets))).norm() <= 1e-15);
  FullState z = FullState::basis(6, targets, 1, Ancilla::kDown);
  z.set_amplitude(2, Ancilla::kDown, -1.0);
  const Eigen::VectorXcd zb = to_dense(z);
  z.apply_diffusion();
  CHECK((to_dense(z) + zb).norm() <= 1e-15);
}

TEST_CASE("one Grover step finds the target for n = 4") {
  const std::vector<std::int64_t> targets{2};
  FullState s = FullState::initial(4, targets);
  s.apply_u(0.0);
  CHECK(std::norm(s.amplitude(2, Ancilla::kDown)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("apply_u matches the dense operator") {
  std::mt19937_64 rng(7);
  const std::vector<std::int64_t> targets{1, 4};
  for (double phi : {0.0, 0.3, 1.1, kPi / 2}) {
    const Dense u = reference_u(7, targets, phi);
    for (int k = 0; k < 5; ++k) {
      FullState s = random_state(7, targets, rng);
      const Eigen::VectorXcd expected = u * to_dense(s);
      s.apply_u(phi);
      CHECK((to_dense(s) - expected).norm() <= 1e-14);
      CHECK(s.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("full damping flips a pure target with certainty") {
  const std::vector<std::int64_t> targets{3};
  FullState s = FullState::basis(5, targets, 3, Ancilla::kDown);
  s.apply_u(kPi / 2);
  CHECK(s.branch_norm_squared(Ancilla::kUp) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.measure_ancilla() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.norm_squared() <= 1e-30);
}

TEST_CASE("factored form equals apply_u") {
  const std::vector<std::int64_t> targets{3};
  for (double phi : {0.0, 0.7, kPi / 2}) {
    for (std::int64_t item = 0; item < 8; ++item) {
      for (Ancilla a : {Ancilla::kDown, Ancilla::kUp}) {
        FullState x = FullState::basis(8, targets, item, a);
        FullState y = x;
        x.apply_u(phi);
        y.apply_u_factored(phi);
        CHECK((to_dense(x) - to_dense(y)).norm() <= 1e-14);
      }
    }
  }
  std::mt19937_64 rng(11);
  dampsearch::testing::Sampler sampler(13);
  for (int k = 0; k < 50; ++k) {
    const int n = static_cast<int>(sampler.integer(2, 20));
    std::vector<std::int64_t> t{sampler.integer(0, n - 1)};
    FullState x = random_state(n, t, rng);
    FullState y = x;
    const double phi = sampler.phi();
    x.apply_u(phi);
    y.apply_u_factored(phi);
    CHECK((to_dense(x) - to_dense(y)).norm() <= 1e-13);
  }
}

TEST_CASE("measure_ancilla") {
  const std::vector<std::int64_t> targets{0};
  FullState down = FullState::initial(3, targets);
  CHECK(down.measure_ancilla() == 0.0);
  CHECK(down.norm_squared() == doctest::Approx(1.0));
  FullState half = FullState::basis(3, targets, 0, Ancilla::kDown);
  half.set_amplitude(0, Ancilla::kDown, 0.6);
  half.set_amplitude(0, Ancilla::kUp, 0.8);
  CHECK(half.measure_ancilla() == doctest::Approx(0.64).epsilon(1e-15));
  CHECK(half.norm_squared() == doctest::Approx(0.36).epsilon(1e-15));
  CHECK(half.branch_norm_squared(Ancilla::kUp) == 0.0);
}

TEST_CASE("reduction") {
  const FullState s = FullState::initial_seeded(50, 5, 3);
  const BlochState b = s.reduced_bloch();
  CHECK(b.t == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(b.z == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(b.x == doctest::Approx(2 * std::sqrt(0.1 * 0.9)).epsilon(1e-14));

  // A non-uniform non-target component leaves span{alpha, beta}.
  const std::vector<std::int64_t> targets{0};
  const FullState off = FullState::basis(4, targets, 1, Ancilla::kDown);
  CHECK(off.reduce().residual > 0.5);
  try {
    (void)off.reduced_bloch();
    FAIL("expected an invariant violation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvariantViolation);
  }
}

TEST_CASE("flip certainty") {
  const std::vector<std::int64_t> targets{2};
  FullState s = FullState::initial(6, targets);
  CHECK(s.verify_flip_certainty());  // empty up branch
  s.apply_u(0.9);
  CHECK(s.verify_flip_certainty());
  FullState bad = FullState::basis(6, targets, 1, Ancilla::kUp);
  CHECK(!bad.verify_flip_certainty());
}

TEST_CASE("full simulation follows the reduced map") {
  for (auto [n, m, phi] : std::vector<std::tuple<int, int, double>>{
           {64, 1, 0.4}, {64, 5, 1.2}, {200, 3, 0.05}, {16, 15, 0.9}}) {
    FullState s = FullState::initial_seeded(n, m, 17);
    const SearchSpace space(n, m);
    const std::vector<double> phis{phi};
    const auto traj = trajectory(space, phis, 60);
    for (int k = 1; k <= 60; ++k) {
      s.apply_u(phi);
      CHECK(s.verify_flip_certainty());
      const double flip = s.measure_ancilla();
      CHECK(flip >= 0.0);
      const ReducedState r = s.reduce();
      CHECK(std::abs(r.y) <= 1e-12);
      CHECK(r.residual <= 1e-10);
      const BlochState& e = traj[k];
      CHECK(std::abs(r.bloch.x - e.x) <= 1e-10);
      CHECK(std::abs(r.bloch.z - e.z) <= 1e-10);
      CHECK(std::abs(r.bloch.t - e.t) <= 1e-10);
    }
  }
}

TEST_CASE("reduced state does not depend on which items are targets") {
  FullState a = FullState::initial_seeded(40, 3, 1);
  FullState b = FullState::initial_seeded(40, 3, 2);
  REQUIRE(a.targets() != b.targets());
  for (int k = 0; k < 20; ++k) {
    a.apply_u(0.5);
    a.measure_ancilla();
    b.apply_u(0.5);
    b.measure_ancilla();
  }
  const BlochState x = a.reduced_bloch(), y = b.reduced_bloch();
  CHECK(std::abs(x.x - y.x) <= 1e-13);
  CHECK(std::abs(x.z - y.z) <= 1e-13);
  CHECK(std::abs(x.t - y.t) <= 1e-13);
}

TEST_CASE("Monte Carlo restart strategy matches the expected cost") {
  const int n = 32;
  const double phi = 0.6;
  const SearchSpace space(n, 1);
  const CostResult best = damped_expected_calls_fixed(space, phi);
  const std::int64_t big_r = *best.best_r;

  // Per-step conditional flip probabilities and the final target fraction,
  // taken from the full simulation.
  FullState s = FullState::initial_seeded(n, 1, 4);
  std::vector<double> flip(big_r + 1);
  for (std::int64_t r = 1; r <= big_r; ++r) {
    s.apply_u(phi);
    flip[r] = s.measure_ancilla();
  }
  const double target_fraction =
      std::norm(s.amplitude(s.targets()[0], Ancilla::kDown)) / s.norm_squared();

  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int trials = 200000;
  double total = 0.0;
  for (int i = 0; i < trials; ++i) {
    double calls = 0.0;
    for (;;) {
      bool done = false;
      std::int64_t r = 1;
      for (; r <= big_r; ++r) {
        if (u(rng) < flip[r]) {
          done = true;
          break;
        }
      }
      if (done) {
        calls += double(r);
        break;
      }
      calls += double(big_r + 1);
      if (u(rng) < target_fraction) break;
    }
    total += calls;
  }
  CHECK(total / trials == doctest::Approx(best.expected_calls).epsilon(0.01));
}
