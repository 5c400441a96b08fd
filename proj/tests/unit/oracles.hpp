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

// Independent reference computations used only by the tests. None of these
// go through the library's eigendecomposition or closed-form paths.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// exp(-i H t) through Eigen's Pade scaling-and-squaring.
inline Matrix expm(const Matrix& h, double t) {
  const Matrix a = (cplx{0.0, -t} * h).eval();
  return a.exp();
}

/// Classical RK4 for i d/dt psi = H psi.
inline Vector rk4(const Matrix& h, Vector psi, double t, double dt) {
  const auto steps = static_cast<long>(std::llround(t / dt));
  const double h_step = t / static_cast<double>(steps);
  const cplx mi{0.0, -1.0};
  for (long k = 0; k < steps; ++k) {
    const Vector k1 = mi * (h * psi);
    const Vector k2 = mi * (h * (psi + 0.5 * h_step * k1));
    const Vector k3 = mi * (h * (psi + 0.5 * h_step * k2));
    const Vector k4 = mi * (h * (psi + h_step * k3));
    psi += (h_step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return psi;
}

inline double spectral_norm(const Matrix& m) { return Eigen::JacobiSVD<Matrix>(m).singularValues()(0); }

/// min over phi of ||U - e^{i phi} V|| by a 7200-point grid followed by
/// golden-section refinement around the best grid point.
inline double phase_distance_search(const Matrix& u, const Matrix& v) {
  auto f = [&](double phi) { return spectral_norm(u - std::polar(1.0, phi) * v); };
  constexpr int kGrid = 7200;
  const double step = 2.0 * std::numbers::pi / kGrid;
  double best_phi = 0.0, best = f(0.0);
  for (int i = 1; i < kGrid; ++i) {
    const double phi = i * step;
    if (const double val = f(phi); val < best) {
      best = val;
      best_phi = phi;
    }
  }
  double a = best_phi - step, b = best_phi + step;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  for (int it = 0; it < 200; ++it) {
    if (f(c) < f(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - g * (b - a);
    d = a + g * (b - a);
  }
  return std::min(best, f(0.5 * (a + b)));
}

/// Haar-ish random unitary from the QR factor of a complex Gaussian matrix.
inline Matrix random_unitary(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> nd;
  Matrix z(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) z(i, j) = cplx{nd(rng), nd(rng)};
  const Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

inline Vector random_state(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> nd;
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = cplx{nd(rng), nd(rng)};
  return v.normalized();
}

inline Matrix random_matrix(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> nd;
  Matrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = cplx{nd(rng), nd(rng)};
  return m;
}

/// P(at least ceil(R/2) failures) by enumerating all 2^R outcomes.
inline double enumerate_majority_failure(double p, unsigned runs) {
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << runs); ++mask) {
    const int fails = std::popcount(mask);
    if (2 * fails > static_cast<int>(runs)) {
      total += std::pow(p, fails) * std::pow(1.0 - p, static_cast<int>(runs) - fails);
    }
  }
  return total;
}

}  // namespace oracle
