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

// Dense complex linear algebra shared by every module: norms, structural
// predicates, exact exponentials of Hermitian matrices and the
// global-phase-aligned distance between unitaries.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "projevo/errors.hpp"

namespace projevo {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;
using Vector2 = Eigen::Vector2cd;
using Vec3 = Eigen::Vector3d;

inline constexpr cplx kI{0.0, 1.0};

/// Largest singular value.
inline double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() <= 16) {
    return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
  }
  return Eigen::BDCSVD<Matrix>(m).singularValues()(0);
}

inline bool is_hermitian(const Matrix& m, double tol = 1e-12) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

inline bool is_unitary(const Matrix& u, double tol = 1e-12) {
  if (u.rows() != u.cols()) return false;
  const Matrix id = Matrix::Identity(u.rows(), u.cols());
  return (u.adjoint() * u - id).cwiseAbs().maxCoeff() <= tol;
}

inline double unitarity_defect(const Matrix& u) {
  return spectral_norm(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()));
}

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Connected components of the off-diagonal sparsity pattern. Each component
/// is returned as a sorted index list; isolated indices form singletons.
inline std::vector<std::vector<Eigen::Index>> support_components(const Matrix& h) {
  const Eigen::Index n = h.rows();
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), Eigen::Index{0});
  auto find = [&](Eigen::Index x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < j; ++i) {
      if (h(i, j) != cplx{} || h(j, i) != cplx{}) {
        const auto a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<std::vector<Eigen::Index>> groups(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::erase_if(groups, [](const auto& g) { return g.empty(); });
  return groups;
}

/// exp(-i H tau) for Hermitian H. Each connected block of the sparsity
/// pattern is diagonalized on its own, so the result has exactly the block
/// structure of H (no fill-in between blocks).
inline Matrix exp_hermitian(const Matrix& h, double tau) {
  require(h.rows() == h.cols(), "exp_hermitian: matrix is not square");
  require(is_hermitian(h), "exp_hermitian: matrix is not Hermitian");
  const Eigen::Index n = h.rows();
  Matrix out = Matrix::Zero(n, n);
  for (const auto& idx : support_components(h)) {
    const auto m = static_cast<Eigen::Index>(idx.size());
    if (m == 1) {
      out(idx[0], idx[0]) = std::exp(-kI * h(idx[0], idx[0]).real() * tau);
      continue;
    }
    Matrix sub(m, m);
    for (Eigen::Index a = 0; a < m; ++a)
      for (Eigen::Index b = 0; b < m; ++b) sub(a, b) = h(idx[a], idx[b]);
    const Eigen::SelfAdjointEigenSolver<Matrix> es(sub);
    const Eigen::VectorXcd phases =
        (es.eigenvalues().cast<cplx>() * (-kI * tau)).array().exp().matrix();
    const Matrix e = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    for (Eigen::Index a = 0; a < m; ++a)
      for (Eigen::Index b = 0; b < m; ++b) out(idx[a], idx[b]) = e(a, b);
  }
  return out;
}

/// Phase phi minimizing ||U - e^{i phi} V|| in spectral norm.
///
/// With W = V^dagger U the norm equals max_k |e^{i theta_k} - e^{i phi}| over
/// the eigenphases of W, so the optimum is the midpoint of the shortest arc
/// holding all eigenphases (the complement of the widest gap between them).
/// For 2x2 inputs with tr(W) != 0 this coincides with arg tr(W).
inline double optimal_phase(const Matrix& u, const Matrix& v) {
  require(u.rows() == v.rows() && u.cols() == v.cols(),
          "optimal_phase: shape mismatch");
  const Matrix w = v.adjoint() * u;
  const Eigen::ComplexEigenSolver<Matrix> es(w, /*computeEigenvectors=*/false);
  std::vector<double> ang;
  ang.reserve(static_cast<std::size_t>(w.rows()));
  for (Eigen::Index k = 0; k < w.rows(); ++k) ang.push_back(std::arg(es.eigenvalues()(k)));
  std::sort(ang.begin(), ang.end());
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::size_t widest = ang.size() - 1;  // gap from the last angle wrapping to the first
  double widest_gap = ang.front() + two_pi - ang.back();
  for (std::size_t k = 0; k + 1 < ang.size(); ++k) {
    const double gap = ang[k + 1] - ang[k];
    if (gap > widest_gap) {
      widest_gap = gap;
      widest = k;
    }
  }
  // The covering arc runs from the angle after the gap to the angle before it.
  const double start = ang[(widest + 1) % ang.size()];
  double end = ang[widest];
  if (end < start) end += two_pi;
  return 0.5 * (start + end);
}

/// min over phi of ||U - e^{i phi} V||, spectral norm.
inline double phase_aligned_distance(const Matrix& u, const Matrix& v) {
  const double phi = optimal_phase(u, v);
  return spectral_norm(u - std::polar(1.0, phi) * v);
}

inline Matrix matrix_power(Matrix base, std::uint64_t n) {
  Matrix acc = Matrix::Identity(base.rows(), base.cols());
  while (n != 0) {
    if (n & 1u) acc = acc * base;
    n >>= 1u;
    if (n != 0) base = base * base;
  }
  return acc;
}

}  // namespace projevo
