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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "csv.hpp"
#include "dampsearch/dampsearch.h"

namespace dampsearch::cli {

namespace {

// Largest register the dense validation simulator accepts.
constexpr std::int64_t kMaxValidateItems = 4096;
constexpr double kValidateTolerance = 1e-10;

struct BadArguments : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvariantFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(dampsearch_status status) {
  if (status == DAMPSEARCH_OK) return;
  const std::string msg = dampsearch_last_error();
  if (status == DAMPSEARCH_ERR_INVALID_ARGUMENT) throw BadArguments(msg);
  throw InvariantFailure(std::string(dampsearch_status_string(status)) + ": " + msg);
}

struct SpaceDeleter {
  void operator()(dampsearch_space* p) const { dampsearch_space_destroy(p); }
};
struct StateDeleter {
  void operator()(dampsearch_fullstate* p) const { dampsearch_fullstate_destroy(p); }
};
using SpacePtr = std::unique_ptr<dampsearch_space, SpaceDeleter>;
using StatePtr = std::unique_ptr<dampsearch_fullstate, StateDeleter>;

SpacePtr make_space(std::int64_t n, std::int64_t m) {
  dampsearch_space* raw = nullptr;
  check(dampsearch_space_create(n, m, &raw));
  return SpacePtr(raw);
}

void require_space(const RunConfig& config) {
  if (config.n == 0 || config.m == 0) {
    throw BadArguments(config.command + " needs --n and --m");
  }
}

const Grid& require_grid(const RunConfig& config) {
  if (!config.grid) throw BadArguments(config.command + " needs --grid min:max:points");
  return *config.grid;
}

double parse_number(std::string_view text) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw BadArguments("not a finite number: '" + std::string(text) + "'");
  }
  return v;
}

// Damping angle for each of `steps` iterations.
std::vector<double> resolve_phis(const RunConfig& config, std::int64_t steps) {
  if (config.phi == "schedule") {
    std::vector<double> phis(static_cast<std::size_t>(std::max<std::int64_t>(steps, 1)));
    for (std::size_t k = 0; k < phis.size(); ++k) {
      check(dampsearch_schedule_phi(static_cast<std::int64_t>(k) + 1, &phis[k]));
    }
    return phis;
  }
  double phi = 0.0;
  if (config.phi == "critical" || config.phi == "critical-m1") {
    const auto space = make_space(config.n, config.phi == "critical" ? config.m : 1);
    check(dampsearch_critical_phi_closed(dampsearch_space_theta(space.get()), &phi));
  } else {
    phi = parse_number(config.phi);
  }
  return {phi};
}

void write_eigencurve(const RunConfig& config, std::ostream& out) {
  require_space(config);
  const auto grid = require_grid(config).values();
  const auto space = make_space(config.n, config.m);
  std::vector<dampsearch_eigen_triple> rows(grid.size());
  check(dampsearch_eigencurve(dampsearch_space_theta(space.get()), grid.data(),
                              grid.size(), rows.data()));
  csv::Writer w(out, {"phi", "re1", "im1", "re2", "im2", "re3", "im3"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    w.add(grid[i]);
    for (int k = 0; k < 3; ++k) w.add(rows[i].re[k]).add(rows[i].im[k]);
    w.end_row();
  }
}

void write_cost_surface(const RunConfig& config, std::ostream& out) {
  if (config.n_list.empty()) throw BadArguments("cost-surface needs --n-list");
  const auto grid = require_grid(config).values();
  const std::int64_t m = config.m == 0 ? 1 : config.m;
  std::vector<SpacePtr> spaces;
  for (std::int64_t n : config.n_list) spaces.push_back(make_space(n, m));

  csv::Writer w(out, {"n", "phi", "expected_calls", "best_r"});
  for (const auto& space : spaces) {
    for (double phi : grid) {
      dampsearch_cost cost;
      check(dampsearch_damped_expected_calls_fixed(space.get(), phi, &cost));
      w.add(dampsearch_space_n(space.get())).add(phi).add(cost.expected_calls).add(cost.best_r);
      w.end_row();
    }
  }
}

void write_trajectory(const RunConfig& config, std::ostream& out) {
  require_space(config);
  if (config.steps < 0) throw BadArguments("--steps must be >= 0");
  const auto space = make_space(config.n, config.m);
  const auto phis = resolve_phis(config, config.steps);
  const auto steps = static_cast<std::size_t>(config.steps);
  std::vector<dampsearch_bloch> states(steps + 1);
  check(dampsearch_trajectory(space.get(), phis.data(), phis.size(), steps,
                              states.data(), states.size()));
  csv::Writer w(out, {"iter", "x", "z", "t"});
  for (std::size_t k = 0; k < states.size(); ++k) {
    w.add(static_cast<std::int64_t>(k)).add(states[k].x).add(states[k].z).add(states[k].t);
    w.end_row();
  }
}

void write_ratio(const RunConfig& config, std::ostream& out) {
  if (config.n == 0 || config.m_list.empty()) {
    throw BadArguments("ratio needs --n and --m-list");
  }
  std::vector<SpacePtr> spaces;
  for (std::int64_t m : config.m_list) spaces.push_back(make_space(config.n, m));

  csv::Writer w(out, {"m", "scheduled", "baseline", "ratio"});
  for (const auto& space : spaces) {
    dampsearch_cost scheduled;
    dampsearch_cost baseline;
    check(dampsearch_schedule_expected_calls(space.get(), nullptr, nullptr,
                                             config.eps, &scheduled));
    check(dampsearch_undamped_expected_calls(space.get(), &baseline));
    w.add(dampsearch_space_m(space.get()))
        .add(scheduled.expected_calls)
        .add(baseline.expected_calls)
        .add(scheduled.expected_calls / baseline.expected_calls);
    w.end_row();
  }
}

// Full simulation against the reduced map. Returns the violated invariant,
// or an empty string.
std::string write_validate(const RunConfig& config, std::ostream& out) {
  require_space(config);
  if (config.n > kMaxValidateItems) {
    throw BadArguments("validate simulates at most " +
                       std::to_string(kMaxValidateItems) + " items");
  }
  if (config.steps < 1) throw BadArguments("--steps must be >= 1");
  const auto space = make_space(config.n, config.m);
  const auto phis = resolve_phis(config, config.steps);
  const auto steps = static_cast<std::size_t>(config.steps);

  std::vector<dampsearch_bloch> reduced(steps + 1);
  check(dampsearch_trajectory(space.get(), phis.data(), phis.size(), steps,
                              reduced.data(), reduced.size()));
  dampsearch_fullstate* raw = nullptr;
  check(dampsearch_fullstate_create_seeded(config.n, config.m, config.seed, &raw));
  const StatePtr state(raw);

  std::string violation;
  double worst = 0.0;
  csv::Writer w(out, {"iter", "x_full", "z_full", "t_full", "y_full", "x_map",
                      "z_map", "t_map", "deviation"});
  for (std::size_t k = 0; k <= steps; ++k) {
    if (k > 0) {
      const double phi = phis.size() == 1 ? phis[0] : phis[k - 1];
      check(dampsearch_fullstate_apply_u(state.get(), phi));
      int certain = 0;
      check(dampsearch_fullstate_verify_flip_certainty(state.get(), &certain));
      if (!certain && violation.empty()) {
        violation = "flip certainty: flipped branch has non-target support at iteration " +
                    std::to_string(k);
      }
      double flip = 0.0;
      check(dampsearch_fullstate_measure_ancilla(state.get(), &flip));
    }
    dampsearch_bloch full;
    double y = 0.0;
    check(dampsearch_fullstate_reduced_bloch(state.get(), &full, &y, nullptr));
    const auto& map = reduced[k];
    const double dev = std::max({std::abs(full.x - map.x), std::abs(full.z - map.z),
                                 std::abs(full.t - map.t), std::abs(y)});
    worst = std::max(worst, dev);
    w.add(static_cast<std::int64_t>(k)).add(full.x).add(full.z).add(full.t).add(y);
    w.add(map.x).add(map.z).add(map.t).add(dev);
    w.end_row();
  }
  if (violation.empty() && worst > kValidateTolerance) {
    violation = "reduced-map agreement: max deviation " + csv::format_double(worst) +
                " exceeds " + csv::format_double(kValidateTolerance);
  }
  return violation;
}

void write_lindblad(const RunConfig& config, std::ostream& out) {
  if (config.critical) {
    double c_star = 0.0;
    check(dampsearch_lindblad_critical(config.c_max, &c_star));
    csv::Writer w(out, {"c_star", "c_max"});
    w.add(c_star).add(config.c_max);
    w.end_row();
    return;
  }
  require_space(config);
  const auto space = make_space(config.n, config.m);
  dampsearch_bloch start;
  check(dampsearch_initial_state(space.get(), &start));
  std::size_t count = 0;
  check(dampsearch_lindblad_step_count(config.total_time, config.dt, &count));
  std::vector<dampsearch_bloch> states(count);
  check(dampsearch_lindblad_integrate(&start, config.c, config.total_time, config.dt,
                                      states.data(), states.size()));
  csv::Writer w(out, {"time", "x", "z", "t"});
  for (std::size_t k = 0; k < states.size(); ++k) {
    const double time = std::min(config.dt * static_cast<double>(k), config.total_time);
    w.add(time).add(states[k].x).add(states[k].z).add(states[k].t);
    w.end_row();
  }
}

void check_finite(const RunConfig& config) {
  for (double v : {config.eps, config.c, config.total_time, config.dt, config.c_max}) {
    if (!std::isfinite(v)) throw BadArguments("numeric flags must be finite");
  }
}

}  // namespace

std::vector<double> Grid::values() const {
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    v[i] = (i == points - 1) ? max : min + (max - min) * i / (points - 1);
  }
  return v;
}

Grid parse_grid(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw std::invalid_argument("grid must look like min:max:points");
  }
  Grid g;
  try {
    g.min = parse_number(text.substr(0, first));
    g.max = parse_number(text.substr(first + 1, second - first - 1));
  } catch (const BadArguments& e) {
    throw std::invalid_argument(e.what());
  }
  const auto count = text.substr(second + 1);
  const auto res = std::from_chars(count.data(), count.data() + count.size(), g.points);
  if (res.ec != std::errc() || res.ptr != count.data() + count.size()) {
    throw std::invalid_argument("grid point count is not an integer");
  }
  if (!(g.min < g.max) || g.points < 2) {
    throw std::invalid_argument("grid needs min < max and at least 2 points");
  }
  return g;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  std::string violation;
  try {
    check_finite(config);
    if (config.command == "eigencurve") {
      write_eigencurve(config, buffer);
    } else if (config.command == "cost-surface") {
      write_cost_surface(config, buffer);
    } else if (config.command == "trajectory") {
      write_trajectory(config, buffer);
    } else if (config.command == "ratio") {
      write_ratio(config, buffer);
    } else if (config.command == "validate") {
      violation = write_validate(config, buffer);
    } else if (config.command == "lindblad") {
      write_lindblad(config, buffer);
    } else {
      throw BadArguments("unknown command '" + config.command + "'");
    }
  } catch (const BadArguments& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArguments;
  } catch (const InvariantFailure& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitValidationFailure;
  }

  if (config.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(config.out, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "error: cannot write " << config.out << '\n';
      return kExitBadArguments;
    }
  }
  if (!violation.empty()) {
    err << "invariant violated: " << violation << '\n';
    return kExitValidationFailure;
  }
  return kExitOk;
}

int execute(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Damped Grover search: reduced maps, spectra, query costs"};
  app.require_subcommand(1);
  RunConfig config;
  std::string grid_text;

  auto grid_option = [&](CLI::App* sub, const std::string& help) {
    sub->add_option("--grid", grid_text, help + " as min:max:points");
  };
  auto space_options = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "number of items");
    sub->add_option("--m", config.m, "number of targets");
  };

  auto* eig = app.add_subcommand("eigencurve", "eigenvalues of the damped map along a phi grid");
  space_options(eig);
  grid_option(eig, "damping grid");

  auto* surface = app.add_subcommand("cost-surface", "restart-strategy cost over (n, phi)");
  surface->add_option("--n-list", config.n_list, "item counts")->delimiter(',');
  surface->add_option("--m", config.m, "number of targets (default 1)");
  grid_option(surface, "damping grid");

  auto* traj = app.add_subcommand("trajectory", "iterate the reduced map");
  space_options(traj);
  traj->add_option("--phi", config.phi, "radians, critical, critical-m1 or schedule");
  traj->add_option("--steps", config.steps, "number of iterations");

  auto* ratio = app.add_subcommand("ratio", "decreasing-schedule cost over the known-m baseline");
  ratio->add_option("--n", config.n, "number of items");
  ratio->add_option("--m-list", config.m_list, "target counts")->delimiter(',');
  ratio->add_option("--eps", config.eps, "survival truncation threshold");

  auto* validate = app.add_subcommand("validate", "full state-vector simulation vs reduced map");
  space_options(validate);
  validate->add_option("--phi", config.phi, "radians, critical, critical-m1 or schedule");
  validate->add_option("--steps", config.steps, "number of iterations");
  validate->add_option("--seed", config.seed, "target placement seed");

  auto* lind = app.add_subcommand("lindblad", "continuous-time limit");
  space_options(lind);
  lind->add_option("--c", config.c, "damping rate");
  lind->add_option("--total-time", config.total_time, "integration time");
  lind->add_option("--dt", config.dt, "RK4 step");
  lind->add_flag("--critical", config.critical, "locate the critical damping rate instead");
  lind->add_option("--c-max", config.c_max, "upper end of the critical search");

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--out", config.out, "output CSV path (default stdout)");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
    if (!grid_text.empty()) config.grid = parse_grid(grid_text);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArguments;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArguments;
  }
  config.command = app.get_subcommands().front()->get_name();
  return run(config, out, err);
}

}  // namespace dampsearch::cli
