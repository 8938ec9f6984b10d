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

#ifndef DAMPSEARCH_MATRIX3_HPP
#define DAMPSEARCH_MATRIX3_HPP

#include <array>
#include <cstddef>

namespace dampsearch {

using Vector3 = std::array<double, 3>;

// Row-major 3x3 real matrix. Only what the reduced maps need.
struct Matrix3 {
  std::array<double, 9> a{};

  static Matrix3 identity() {
    Matrix3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    return m;
  }

  double& operator()(std::size_t r, std::size_t c) { return a[3 * r + c]; }
  double operator()(std::size_t r, std::size_t c) const { return a[3 * r + c]; }

  double trace() const { return a[0] + a[4] + a[8]; }
  // Sum of the principal 2x2 minors (second elementary symmetric function
  // of the eigenvalues).
  double principal_minor_sum() const;
  double determinant() const;

  friend bool operator==(const Matrix3&, const Matrix3&) = default;
};

Matrix3 operator*(const Matrix3& lhs, const Matrix3& rhs);
Vector3 operator*(const Matrix3& m, const Vector3& v);
Matrix3 operator+(const Matrix3& lhs, const Matrix3& rhs);
Matrix3 operator*(double s, const Matrix3& m);

double max_abs_diff(const Matrix3& lhs, const Matrix3& rhs);

// exp(m) by scaling and squaring of a truncated Taylor series; accurate to
// a few ulps of ||exp(m)|| for the modest norms used here.
Matrix3 expm(const Matrix3& m);

}  // namespace dampsearch

#endif  // DAMPSEARCH_MATRIX3_HPP
