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

#include "dampsearch/spectral.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dampsearch/error.hpp"

namespace dampsearch {

namespace {

using cd = std::complex<double>;

// mu^3 + p mu + q for the traceless part of m; lambda = mu + shift.
struct DepressedCubic {
  double shift = 0.0;
  double p = 0.0;
  double q = 0.0;
  double scale = 0.0;  // sum of squares of the traceless part

  double discriminant() const { return -4.0 * p * p * p - 27.0 * q * q; }
};

DepressedCubic depress(const Matrix3& m) {
  DepressedCubic c;
  c.shift = m.trace() / 3.0;
  Matrix3 b = m;
  for (std::size_t i = 0; i < 3; ++i) b(i, i) -= c.shift;
  c.p = b.principal_minor_sum();
  c.q = -b.determinant();
  for (double v : b.a) c.scale += v * v;
  return c;
}

template <typename T>
T polish(const DepressedCubic& c, T mu) {
  const T g = mu * mu * mu + c.p * mu + c.q;
  const T dg = 3.0 * mu * mu + c.p;
  if (std::abs(dg) == 0.0) return mu;
  const T next = mu - g / dg;
  const T g_next = next * next * next + c.p * next + c.q;
  return std::abs(g_next) < std::abs(g) ? next : mu;
}


// Recomputes the two closest of three real roots (sorted descending) from
// the quadratic left after dividing out the isolated one. Coefficients of
// that quadratic are small when the close pair is small, so a double root
// near zero keeps full absolute accuracy.
std::array<double, 3> refine_closest_pair(const Matrix3& m, std::array<double, 3> roots) {
  const bool top_isolated = roots[0] - roots[1] >= roots[1] - roots[2];
  const double tr = m.trace();
  const double e2 = m.principal_minor_sum();
  const double det = m.determinant();
  double single = top_isolated ? roots[0] : roots[2];
  for (int i = 0; i < 4; ++i) {
    const double g = ((single - tr) * single + e2) * single - det;
    const double dg = (3.0 * single - 2.0 * tr) * single + e2;
    if (dg == 0.0) break;
    const double next = single - g / dg;
    const double g_next = ((next - tr) * next + e2) * next - det;
    if (!(std::abs(g_next) < std::abs(g))) break;
    single = next;
  }
  const double a = top_isolated ? roots[1] : roots[0];
  const double b = top_isolated ? roots[2] : roots[1];
  const double sum = tr - single;
  const double product = (single != 0.0 && std::abs(single) >= std::max(std::abs(a), std::abs(b)))
                             ? det / single
                             : e2 - single * sum;
  const double half = 0.5 * sum;
  const double big = half + std::copysign(std::sqrt(std::max(0.0, half * half - product)), half);
  const double small = big != 0.0 ? product / big : 0.0;
  std::array<double, 3> out{single, big, small};
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

std::complex<double> EigenTriple::product() const {
  return values[0] * values[1] * values[2];
}

std::complex<double> EigenTriple::sum() const {
  return values[0] + values[1] + values[2];
}

double cubic_discriminant(const Matrix3& m) { return depress(m).discriminant(); }

EigenTriple eigenvalues(const Matrix3& m) {
  const DepressedCubic c = depress(m);
  const double disc = c.discriminant();
  const double natural = c.scale * c.scale * c.scale;
  EigenTriple out;

  if (c.scale == 0.0 || std::abs(disc) <= 1e-14 * natural) {
    // Repeated root: the double pair is snapped onto its mean.
    const double half = c.p < 0.0 ? std::sqrt(-c.p / 3.0) : 0.0;
    const double dbl = std::copysign(half, c.q);
    std::array<double, 3> roots{c.shift - 2.0 * dbl, c.shift + dbl, c.shift + dbl};
    std::sort(roots.begin(), roots.end(), std::greater<>());
    roots = refine_closest_pair(m, roots);
    for (int k = 0; k < 3; ++k) out.values[k] = cd(roots[k]);
    return out;
  }

  if (disc > 0.0) {
    const double r = 2.0 * std::sqrt(-c.p / 3.0);
    const double arg =
        std::clamp(1.5 * c.q / c.p * std::sqrt(-3.0 / c.p), -1.0, 1.0);
    const double base = std::acos(arg) / 3.0;
    std::array<double, 3> roots;
    for (int k = 0; k < 3; ++k) {
      roots[k] = polish(c, r * std::cos(base - 2.0 * std::numbers::pi * k / 3.0)) + c.shift;
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    roots = refine_closest_pair(m, roots);
    for (int k = 0; k < 3; ++k) out.values[k] = cd(roots[k]);
    return out;
  }

  // One real root and a conjugate pair.
  const double root = std::sqrt(c.q * c.q / 4.0 + c.p * c.p * c.p / 27.0);
  const double u = -std::copysign(std::cbrt(std::abs(c.q) / 2.0 + root), c.q);
  const double v = u != 0.0 ? -c.p / (3.0 * u) : 0.0;
  const double real_root = polish(c, u + v);
  cd pair(-(u + v) / 2.0, std::sqrt(3.0) / 2.0 * std::abs(u - v));
  pair = polish(c, pair);
  if (pair.imag() < 0.0) pair = std::conj(pair);
  out.values = {pair + c.shift, std::conj(pair) + c.shift, cd(real_root + c.shift)};
  return out;
}

double critical_phi_closed(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    fail(ErrorCode::kInvalidArgument, "critical damping needs 0 < theta < pi");
  }
  // cos phi = (1 - s) / (1 + s)  <=>  tan^2(phi / 2) = s.
  return 2.0 * std::atan(std::sqrt(std::sin(theta)));
}

double locate_degeneracy(const std::function<Matrix3(double)>& family,
                         double lo, double hi, double tol, int scan_points) {
  if (!(hi > lo) || scan_points < 1 || !(tol > 0.0)) {
    fail(ErrorCode::kInvalidArgument, "bad degeneracy search interval");
  }
  auto disc = [&](double p) { return cubic_discriminant(family(p)); };

  const double step = (hi - lo) / scan_points;
  double left = lo;
  bool left_negative = disc(left) < 0.0;
  for (int i = 1; i <= scan_points; ++i) {
    const double right = (i == scan_points) ? hi : lo + step * i;
    const bool right_negative = disc(right) < 0.0;
    if (left_negative && !right_negative) {
      double a = left;
      double b = right;
      while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        (disc(mid) < 0.0 ? a : b) = mid;
      }
      return 0.5 * (a + b);
    }
    left = right;
    left_negative = right_negative;
  }
  fail(ErrorCode::kNoSignChange,
       "discriminant does not change sign on [" + std::to_string(lo) + ", " +
           std::to_string(hi) + "]");
}

double critical_phi_numeric(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi / 2)) {
    fail(ErrorCode::kInvalidArgument,
         "numeric critical damping needs 0 < theta < pi/2");
  }
  return locate_degeneracy(
      [theta](double phi) { return damped_map(theta, phi).entries; }, 0.0,
      std::numbers::pi / 2, 1e-11);
}

std::vector<EigenRow> eigencurve(double theta, std::span<const double> phi_grid) {
  if (!std::is_sorted(phi_grid.begin(), phi_grid.end())) {
    fail(ErrorCode::kInvalidArgument, "eigencurve grid must be sorted ascending");
  }
  std::vector<EigenRow> rows;
  rows.reserve(phi_grid.size());
  for (double phi : phi_grid) {
    EigenRow row{phi, eigenvalues(damped_map(theta, phi))};
    if (!rows.empty()) {
      // Assignment of new roots to the previous columns with the smallest
      // total displacement; 3! candidates.
      const auto& prev = rows.back().eig.values;
      std::array<int, 3> perm{0, 1, 2};
      std::array<int, 3> best = perm;
      double best_cost = std::numeric_limits<double>::infinity();
      do {
        double cost = 0.0;
        for (int j = 0; j < 3; ++j) cost += std::abs(row.eig.values[perm[j]] - prev[j]);
        if (cost < best_cost) {
          best_cost = cost;
          best = perm;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      const auto unordered = row.eig.values;
      for (int j = 0; j < 3; ++j) row.eig.values[j] = unordered[best[j]];
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dampsearch
