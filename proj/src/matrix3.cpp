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

#include "dampsearch/matrix3.hpp"

#include <algorithm>
#include <cmath>

namespace dampsearch {

double Matrix3::principal_minor_sum() const {
  const Matrix3& m = *this;
  return (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) +
         (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
         (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
}

double Matrix3::determinant() const {
  const Matrix3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Matrix3 operator*(const Matrix3& lhs, const Matrix3& rhs) {
  Matrix3 out;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      out(r, c) = lhs(r, 0) * rhs(0, c) + lhs(r, 1) * rhs(1, c) +
                  lhs(r, 2) * rhs(2, c);
    }
  }
  return out;
}

Vector3 operator*(const Matrix3& m, const Vector3& v) {
  return {m(0, 0) * v[0] + m(0, 1) * v[1] + m(0, 2) * v[2],
          m(1, 0) * v[0] + m(1, 1) * v[1] + m(1, 2) * v[2],
          m(2, 0) * v[0] + m(2, 1) * v[1] + m(2, 2) * v[2]};
}

Matrix3 operator+(const Matrix3& lhs, const Matrix3& rhs) {
  Matrix3 out;
  for (std::size_t i = 0; i < 9; ++i) out.a[i] = lhs.a[i] + rhs.a[i];
  return out;
}

Matrix3 operator*(double s, const Matrix3& m) {
  Matrix3 out;
  for (std::size_t i = 0; i < 9; ++i) out.a[i] = s * m.a[i];
  return out;
}

double max_abs_diff(const Matrix3& lhs, const Matrix3& rhs) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 9; ++i) {
    worst = std::max(worst, std::abs(lhs.a[i] - rhs.a[i]));
  }
  return worst;
}

Matrix3 expm(const Matrix3& m) {
  double norm = 0.0;  // max column sum
  for (std::size_t c = 0; c < 3; ++c) {
    norm = std::max(norm, std::abs(m(0, c)) + std::abs(m(1, c)) + std::abs(m(2, c)));
  }
  int squarings = 0;
  if (norm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  const Matrix3 scaled = std::ldexp(1.0, -squarings) * m;

  // ||scaled|| <= 1/4, so 18 terms are far below double precision.
  Matrix3 result = Matrix3::identity();
  Matrix3 term = Matrix3::identity();
  for (int k = 1; k <= 18; ++k) {
    term = (1.0 / k) * (term * scaled);
    result = result + term;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace dampsearch
