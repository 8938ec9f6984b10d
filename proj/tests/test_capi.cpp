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

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>
#include <vector>

#include "dampsearch/dampsearch.h"

constexpr double kPi = std::numbers::pi;

namespace {

struct Space {
  explicit Space(int64_t n, int64_t m) { REQUIRE(dampsearch_space_create(n, m, &ptr) == DAMPSEARCH_OK); }
  ~Space() { dampsearch_space_destroy(ptr); }
  dampsearch_space* ptr = nullptr;
};

double constant_phi(int64_t, void* data) { return *static_cast<double*>(data); }

double decreasing_phi(int64_t n, void*) {
  double out = 0.0;
  dampsearch_schedule_phi(n, &out);
  return out;
}

}  // namespace

TEST_CASE("space handle") {
  Space s(10000, 1);
  CHECK(dampsearch_space_n(s.ptr) == 10000);
  CHECK(dampsearch_space_m(s.ptr) == 1);
  CHECK(std::abs(dampsearch_space_theta(s.ptr) - 0.020000333348334226251) <= 1e-15);

  dampsearch_space* bad = reinterpret_cast<dampsearch_space*>(0x1);
  CHECK(dampsearch_space_create(5, 5, &bad) == DAMPSEARCH_ERR_INVALID_ARGUMENT);
  CHECK(bad == reinterpret_cast<dampsearch_space*>(0x1));
  CHECK(std::string(dampsearch_last_error()).size() > 0);
  CHECK(dampsearch_space_create(5, 1, nullptr) == DAMPSEARCH_ERR_INVALID_ARGUMENT);
  dampsearch_space_destroy(nullptr);
}

TEST_CASE("status strings") {
  for (int s = 0; s <= 7; ++s) {
    CHECK(std::strlen(dampsearch_status_string(static_cast<dampsearch_status>(s))) > 0);
  }
}

TEST_CASE("map and Kraus step") {
  double m[9];
  REQUIRE(dampsearch_damped_map(kPi / 2, kPi / 2, m) == DAMPSEARCH_OK);
  const double expected[9] = {0, 0, 0, 0, -0.5, -0.5, 0, 0.5, 0.5};
  for (int i = 0; i < 9; ++i) CHECK(std::abs(m[i] - expected[i]) <= 1e-15);
  CHECK(dampsearch_damped_map(0.1, 2.0, m) == DAMPSEARCH_ERR_INVALID_ARGUMENT);

  const dampsearch_bloch target{0.0, -1.0, 1.0};
  dampsearch_bloch out;
  double flip = -1.0;
  REQUIRE(dampsearch_kraus_step(&target, 0.3, kPi / 2, &out, &flip) == DAMPSEARCH_OK);
  CHECK(flip == doctest::Approx(1.0));
  CHECK(std::abs(out.t) <= 1e-15);
  CHECK(dampsearch_kraus_step(nullptr, 0.3, 0.1, &out, &flip) == DAMPSEARCH_ERR_INVALID_ARGUMENT);
}

TEST_CASE("trajectory buffer handling") {
  Space s(64, 1);
  const double phi = 0.4;
  std::vector<dampsearch_bloch> out(11);
  CHECK(dampsearch_trajectory(s.ptr, &phi, 1, 10, out.data(), 10) == DAMPSEARCH_ERR_BUFFER_TOO_SMALL);
  REQUIRE(dampsearch_trajectory(s.ptr, &phi, 1, 10, out.data(), out.size()) == DAMPSEARCH_OK);
  dampsearch_bloch init;
  REQUIRE(dampsearch_initial_state(s.ptr, &init) == DAMPSEARCH_OK);
  CHECK(out[0].x == init.x);
  CHECK(out[0].t == 1.0);
  CHECK(out[10].t < out[1].t);
  const double two[2] = {0.1, 0.2};
  CHECK(dampsearch_trajectory(s.ptr, two, 2, 10, out.data(), out.size()) == DAMPSEARCH_ERR_INVALID_ARGUMENT);
}

TEST_CASE("spectral functions") {
  double star = 0.0;
  REQUIRE(dampsearch_critical_phi_closed(0.2, &star) == DAMPSEARCH_OK);
  CHECK(std::abs(star - 0.83858359793137709204) <= 1e-14);
  double numeric = 0.0;
  REQUIRE(dampsearch_critical_phi_numeric(0.2, &numeric) == DAMPSEARCH_OK);
  CHECK(std::abs(numeric - star) <= 1e-8);
  CHECK(dampsearch_critical_phi_numeric(2.0, &numeric) == DAMPSEARCH_ERR_INVALID_ARGUMENT);

  dampsearch_eigen_triple e;
  REQUIRE(dampsearch_eigenvalues(0.3, 0.0, &e) == DAMPSEARCH_OK);
  CHECK(std::abs(e.re[2] - 1.0) <= 1e-12);
  CHECK(std::abs(std::abs(e.im[0]) - std::sin(0.6)) <= 1e-12);

  const double grid[3] = {0.0, 0.5, 1.0};
  dampsearch_eigen_triple rows[3];
  REQUIRE(dampsearch_eigencurve(0.3, grid, 3, rows) == DAMPSEARCH_OK);
  const double unsorted[2] = {1.0, 0.0};
  CHECK(dampsearch_eigencurve(0.3, unsorted, 2, rows) == DAMPSEARCH_ERR_INVALID_ARGUMENT);
}

TEST_CASE("costs") {
  Space s(10000, 1);
  dampsearch_cost c;
  REQUIRE(dampsearch_undamped_expected_calls(s.ptr, &c) == DAMPSEARCH_OK);
  CHECK(std::abs(c.expected_calls - 69.592240008999333081) <= 1e-10);
  CHECK(c.best_r == 58);

  Space two(2, 1);
  REQUIRE(dampsearch_damped_expected_calls_fixed(two.ptr, kPi / 2, &c) == DAMPSEARCH_OK);
  CHECK(c.expected_calls == doctest::Approx(1.5));
  CHECK(c.best_r == 1);

  REQUIRE(dampsearch_schedule_expected_calls(two.ptr, nullptr, nullptr, 1e-12, &c) == DAMPSEARCH_OK);
  CHECK(std::abs(c.expected_calls - 1.5397908411824648891) <= 1e-12);
  CHECK(c.best_r == 0);
  CHECK(c.horizon == 5150);

  dampsearch_cost via_callback;
  REQUIRE(dampsearch_schedule_expected_calls(two.ptr, decreasing_phi, nullptr, 1e-12, &via_callback) ==
          DAMPSEARCH_OK);
  CHECK(via_callback.expected_calls == c.expected_calls);

  double zero = 0.0;
  CHECK(dampsearch_schedule_expected_calls(two.ptr, constant_phi, &zero, 1e-12, &c) ==
        DAMPSEARCH_ERR_NO_CONVERGENCE);
  CHECK(dampsearch_schedule_expected_calls(two.ptr, nullptr, nullptr, 0.1, &c) ==
        DAMPSEARCH_ERR_INVALID_ARGUMENT);
  double phi2 = 0.0;
  REQUIRE(dampsearch_schedule_phi(2, &phi2) == DAMPSEARCH_OK);
  CHECK(std::abs(phi2 - 1.398370329082047553) <= 1e-14);
  CHECK(dampsearch_grover_success_prob(kPi / 3, 1) == doctest::Approx(1.0));
}

TEST_CASE("full state lifecycle") {
  const int64_t targets[1] = {1};
  dampsearch_fullstate* s = nullptr;
  REQUIRE(dampsearch_fullstate_create(2, targets, 1, &s) == DAMPSEARCH_OK);
  std::vector<double> re(4), im(4);
  CHECK(dampsearch_fullstate_amplitudes(s, re.data(), im.data(), 3) == DAMPSEARCH_ERR_BUFFER_TOO_SMALL);
  REQUIRE(dampsearch_fullstate_amplitudes(s, re.data(), im.data(), 4) == DAMPSEARCH_OK);
  CHECK(re[0] == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(re[1] == 0.0);

  dampsearch_fullstate* copy = nullptr;
  REQUIRE(dampsearch_fullstate_clone(s, &copy) == DAMPSEARCH_OK);
  REQUIRE(dampsearch_fullstate_apply_u(s, 0.8) == DAMPSEARCH_OK);
  REQUIRE(dampsearch_fullstate_apply_u_factored(copy, 0.8) == DAMPSEARCH_OK);
  std::vector<double> re2(4), im2(4);
  dampsearch_fullstate_amplitudes(s, re.data(), im.data(), 4);
  dampsearch_fullstate_amplitudes(copy, re2.data(), im2.data(), 4);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(re[i] - re2[i]) <= 1e-14);

  int certain = 0;
  REQUIRE(dampsearch_fullstate_verify_flip_certainty(s, &certain) == DAMPSEARCH_OK);
  CHECK(certain == 1);
  double flip = -1.0;
  REQUIRE(dampsearch_fullstate_measure_ancilla(s, &flip) == DAMPSEARCH_OK);
  CHECK(flip > 0.0);
  dampsearch_bloch b;
  double y = 1.0, residual = 1.0;
  REQUIRE(dampsearch_fullstate_reduced_bloch(s, &b, &y, &residual) == DAMPSEARCH_OK);
  CHECK(std::abs(y) <= 1e-12);
  CHECK(b.t == doctest::Approx(1.0 - flip));
  REQUIRE(dampsearch_fullstate_reduced_bloch(s, &b, nullptr, nullptr) == DAMPSEARCH_OK);
  REQUIRE(dampsearch_fullstate_apply_oracle(s) == DAMPSEARCH_OK);
  REQUIRE(dampsearch_fullstate_apply_diffusion(s) == DAMPSEARCH_OK);

  dampsearch_fullstate_destroy(s);
  dampsearch_fullstate_destroy(copy);
  dampsearch_fullstate_destroy(nullptr);

  const int64_t dup[2] = {0, 0};
  CHECK(dampsearch_fullstate_create(3, dup, 2, &s) == DAMPSEARCH_ERR_INVALID_ARGUMENT);
  CHECK(dampsearch_fullstate_create_seeded(4, 0, 1, &s) == DAMPSEARCH_ERR_INVALID_ARGUMENT);
  CHECK(dampsearch_fullstate_apply_u(nullptr, 0.1) == DAMPSEARCH_ERR_INVALID_ARGUMENT);
}

TEST_CASE("Lindblad functions") {
  double g[9];
  REQUIRE(dampsearch_lindblad_generator(1.0, g) == DAMPSEARCH_OK);
  CHECK(g[1] == 2.0);
  CHECK(g[3] == -2.0);
  size_t count = 0;
  REQUIRE(dampsearch_lindblad_step_count(1.0, 0.1, &count) == DAMPSEARCH_OK);
  CHECK(count == 11);
  const dampsearch_bloch s0{0.0, 1.0, 1.0};
  std::vector<dampsearch_bloch> out(count);
  CHECK(dampsearch_lindblad_integrate(&s0, 1.0, 1.0, 0.1, out.data(), count - 1) ==
        DAMPSEARCH_ERR_BUFFER_TOO_SMALL);
  REQUIRE(dampsearch_lindblad_integrate(&s0, 1.0, 1.0, 0.1, out.data(), count) == DAMPSEARCH_OK);
  dampsearch_bloch exact;
  REQUIRE(dampsearch_lindblad_exact(&s0, 1.0, 1.0, &exact) == DAMPSEARCH_OK);
  CHECK(std::abs(out.back().t - exact.t) <= 1e-5);
  double c = 0.0;
  REQUIRE(dampsearch_lindblad_critical(10.0, &c) == DAMPSEARCH_OK);
  CHECK(std::abs(c - 2.0) <= 1e-8);
  CHECK(dampsearch_lindblad_critical(1.0, &c) == DAMPSEARCH_ERR_NO_SIGN_CHANGE);
  dampsearch_eigen_triple e;
  REQUIRE(dampsearch_lindblad_eigenvalues(3.0, &e) == DAMPSEARCH_OK);
  for (double v : e.im) CHECK(v == 0.0);
}
