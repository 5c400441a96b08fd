// Copyright 2026 The projevo Authors
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

#pragma once

// 2x2 operators in the Pauli basis and their Bloch-sphere geometry.
//
// Conventions: basis (|0>, |1>), sigma_3 = diag(1, -1), Bloch vector
// r = (<sigma_1>, <sigma_2>, <sigma_3>), rotations exp(-i (angle/2) n.sigma)
// act on r as right-handed rotations by `angle` about n.

#include <algorithm>
#include <array>
#include <cmath>

#include "projevo/linalg.hpp"

namespace projevo {

namespace pauli {

inline Matrix2 identity() { return Matrix2::Identity(); }

inline Matrix2 sigma1() {
  Matrix2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline Matrix2 sigma2() {
  Matrix2 m;
  m << cplx{}, -kI, kI, cplx{};
  return m;
}

inline Matrix2 sigma3() {
  Matrix2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

inline const std::array<Matrix2, 3>& sigmas() {
  static const std::array<Matrix2, 3> s{sigma1(), sigma2(), sigma3()};
  return s;
}

}  // namespace pauli

/// Coefficients of a 2x2 operator over {I, sigma_1, sigma_2, sigma_3}.
/// Coefficients are complex in general; they are all real exactly when the
/// operator is Hermitian.
struct PauliVector {
  cplx a0{};
  std::array<cplx, 3> a{};

  [[nodiscard]] Matrix2 to_matrix() const {
    Matrix2 m = a0 * pauli::identity();
    for (std::size_t k = 0; k < 3; ++k) m += a[k] * pauli::sigmas()[k];
    return m;
  }

  [[nodiscard]] bool is_real(double tol = 1e-14) const {
    return std::abs(a0.imag()) <= tol &&
           std::all_of(a.begin(), a.end(), [tol](cplx c) { return std::abs(c.imag()) <= tol; });
  }

  /// Real parts of (a_1, a_2, a_3).
  [[nodiscard]] Vec3 vector_part() const { return {a[0].real(), a[1].real(), a[2].real()}; }
};

/// a0 = tr(M)/2, a_k = tr(sigma_k M)/2.
inline PauliVector pauli_decompose(const Matrix2& m) {
  PauliVector p;
  p.a0 = 0.5 * m.trace();
  for (std::size_t k = 0; k < 3; ++k) p.a[k] = 0.5 * (pauli::sigmas()[k] * m).trace();
  return p;
}

/// Unit axis plus rotation angle in radians.
class AxisAngle {
public:
  static constexpr double kAxisTolerance = 1e-10;

  AxisAngle(const Vec3& axis, double angle) : axis_(axis), angle_(angle) {
    require(std::abs(axis.norm() - 1.0) <= kAxisTolerance,
            "AxisAngle: axis must be a unit vector");
    axis_.normalize();
  }

  [[nodiscard]] const Vec3& axis() const noexcept { return axis_; }
  [[nodiscard]] double angle() const noexcept { return angle_; }

  [[nodiscard]] AxisAngle inverse() const { return {axis_, -angle_}; }

private:
  Vec3 axis_;
  double angle_;
};

/// exp(-i (angle/2) n.sigma); angle 2 pi gives -I.
inline Matrix2 rotation_unitary(const AxisAngle& r) {
  const double half = 0.5 * r.angle();
  Matrix2 ns = Matrix2::Zero();
  for (std::size_t k = 0; k < 3; ++k) ns += r.axis()(static_cast<Eigen::Index>(k)) * pauli::sigmas()[k];
  return std::cos(half) * pauli::identity() - kI * std::sin(half) * ns;
}

/// Rodrigues rotation of a real 3-vector.
inline Vec3 rotate_vector(const AxisAngle& r, const Vec3& v) {
  const Vec3& n = r.axis();
  const double c = std::cos(r.angle()), s = std::sin(r.angle());
  return c * v + s * n.cross(v) + (1.0 - c) * n.dot(v) * n;
}

inline double phase_aligned_distance(const Matrix2& u, const Matrix2& v) {
  return phase_aligned_distance(Matrix(u), Matrix(v));
}

inline constexpr double kNormalizationTolerance = 1e-12;

/// (<sigma_1>, <sigma_2>, <sigma_3>) of a normalized 2-state.
inline Vec3 bloch_point(const Vector2& psi) {
  require(std::abs(psi.norm() - 1.0) <= kNormalizationTolerance,
          "bloch_point: state is not normalized");
  const cplx coh = std::conj(psi(0)) * psi(1);
  return {2.0 * coh.real(), 2.0 * coh.imag(), std::norm(psi(0)) - std::norm(psi(1))};
}

}  // namespace projevo
