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

#ifndef DAMPSEARCH_SPECTRAL_HPP
#define DAMPSEARCH_SPECTRAL_HPP

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "dampsearch/blochmap.hpp"
#include "dampsearch/matrix3.hpp"

namespace dampsearch {

// Three eigenvalues of a real 3x3 map. A non-real pair is stored first
// (positive imaginary part, then its conjugate), followed by the real root;
// three real roots are stored in descending order. eigencurve() reorders
// rows for continuity instead.
struct EigenTriple {
  std::array<std::complex<double>, 3> values;

  std::complex<double> product() const;
  std::complex<double> sum() const;
};

// Roots of the characteristic cubic via the depressed form of
// (m - tr(m)/3 I), trigonometric branch for three real roots and Cardano
// otherwise, followed by one Newton polish per root.
EigenTriple eigenvalues(const Matrix3& m);
inline EigenTriple eigenvalues(const DampedMap& map) {
  return eigenvalues(map.entries);
}

// Discriminant of the characteristic cubic, computed from the traceless
// part of m so it stays accurate close to a triple root. Negative: one real
// root and a conjugate pair. Positive: three distinct real roots.
double cubic_discriminant(const Matrix3& m);

// arccos((1 - sin theta) / (1 + sin theta)).
double critical_phi_closed(double theta);

// Smallest parameter in (lo, hi) at which cubic_discriminant(family(p))
// turns from negative to positive. The interval is scanned on a uniform
// grid, then the bracketing cell is bisected down to tol. Throws
// Error(kNoSignChange) when the scan finds no such crossing.
double locate_degeneracy(const std::function<Matrix3(double)>& family,
                         double lo, double hi, double tol,
                         int scan_points = 4096);

// Damping at which the eigenvalues of damped_map(theta, .) merge, located
// on the discriminant. Requires 0 < theta < pi/2.
double critical_phi_numeric(double theta);

struct EigenRow {
  double phi = 0.0;
  EigenTriple eig;
};

// Eigenvalues along a sorted phi grid, each row matched to the previous one
// by greedy nearest neighbour so the three columns are continuous curves.
std::vector<EigenRow> eigencurve(double theta, std::span<const double> phi_grid);

}  // namespace dampsearch

#endif  // DAMPSEARCH_SPECTRAL_HPP
