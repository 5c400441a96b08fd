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

// Continuous (projector-sum Hamiltonian) and discrete (reflection product)
// search evolutions restricted to the invariant plane span{|t>, |t_perp>},
// with |t> = (1, 0) and |s> = (1/sqrt(N), sqrt((N-1)/N)).

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "projevo/pauli_bloch.hpp"

namespace projevo {

class SearchInstance {
public:
  explicit SearchInstance(std::uint64_t n) : n_(n) {
    require(n >= 2, "SearchInstance: database size N must be >= 2");
  }

  [[nodiscard]] std::uint64_t size() const noexcept { return n_; }
  [[nodiscard]] double n() const noexcept { return static_cast<double>(n_); }
  [[nodiscard]] double sqrt_n() const noexcept { return std::sqrt(n()); }

  /// |<t|s>| = 1/sqrt(N).
  [[nodiscard]] double overlap() const noexcept { return 1.0 / sqrt_n(); }

  /// Rotation of the state per Grover step, alpha = 2 asin(1/sqrt(N)).
  [[nodiscard]] double alpha() const noexcept { return 2.0 * std::asin(overlap()); }

  /// Bloch-sphere angle turned by one Grover step, 2 alpha.
  [[nodiscard]] double grover_angle() const noexcept { return 2.0 * alpha(); }

  /// Continuous search time T = (pi/2) sqrt(N).
  [[nodiscard]] double search_time() const noexcept { return 0.5 * std::numbers::pi * sqrt_n(); }

  [[nodiscard]] Vector2 target_state() const { return {1.0, 0.0}; }
  [[nodiscard]] Vector2 orthogonal_state() const { return {0.0, 1.0}; }
  [[nodiscard]] Vector2 source_state() const { return {overlap(), std::sqrt((n() - 1.0) / n())}; }

  /// Rotation axis of the continuous evolution, n = (sqrt((N-1)/N), 0, 1/sqrt(N)).
  [[nodiscard]] Vec3 continuous_axis() const { return {std::sqrt((n() - 1.0) / n()), 0.0, overlap()}; }

  /// Rotation axis of the Grover step. H_G is proportional to -sigma_2, so
  /// U_G turns the Bloch sphere by a positive angle about -y.
  [[nodiscard]] Vec3 grover_axis() const { return {0.0, -1.0, 0.0}; }

private:
  std::uint64_t n_;
};

struct GroverStepParams {
  double tau;      ///< evolution time of H_G per step
  double q_total;  ///< Q_T, fractional number of steps to reach |t>
};

struct EquivalenceParams {
  double qt;    ///< fractional Grover power Q_t
  double beta;  ///< sigma_3 phase-rotation angle
};

inline Matrix2 reflection(const Vector2& v) {
  return Matrix2::Identity() - 2.0 * v * v.adjoint();
}

inline Matrix2 projector(const Vector2& v) { return v * v.adjoint(); }

/// H_C = |s><s| + |t><t| = I + (sqrt(N-1)/N) sigma_1 + (1/N) sigma_3.
inline PauliVector hamiltonian_continuous(const SearchInstance& inst) {
  const double n = inst.n();
  return {1.0, {std::sqrt(n - 1.0) / n, 0.0, 1.0 / n}};
}

/// exp(-i n.sigma t / sqrt(N)), i.e. exp(-i H_C t) without its global phase.
inline Matrix2 evolve_continuous(const SearchInstance& inst, double t) {
  require(t >= 0.0, "evolve_continuous: t must be >= 0");
  return rotation_unitary(AxisAngle(inst.continuous_axis(), 2.0 * t / inst.sqrt_n()));
}

/// U_G = -(1 - 2|s><s|)(1 - 2|t><t|).
inline Matrix2 grover_step(const SearchInstance& inst) {
  return -reflection(inst.source_state()) * reflection(inst.target_state());
}

/// H_G = -(sqrt(N-1)/N) sigma_2, the generator with U_G = exp(-i H_G tau).
inline PauliVector grover_hamiltonian(const SearchInstance& inst) {
  const double n = inst.n();
  return {0.0, {0.0, -std::sqrt(n - 1.0) / n, 0.0}};
}

/// i [|t><t|, |s><s|] built from explicit projectors.
inline Matrix2 projector_commutator(const SearchInstance& inst) {
  const Matrix2 pt = projector(inst.target_state());
  const Matrix2 ps = projector(inst.source_state());
  return kI * (pt * ps - ps * pt);
}

inline GroverStepParams step_params(const SearchInstance& inst) {
  const double n = inst.n();
  const double half_alpha = std::asin(inst.overlap());
  return {2.0 * n / std::sqrt(n - 1.0) * half_alpha,
          std::acos(inst.overlap()) / (2.0 * half_alpha)};
}

/// Integer number of Grover steps actually run, floor(Q_T + 1/2).
inline std::uint64_t optimal_steps(const SearchInstance& inst) {
  return static_cast<std::uint64_t>(std::floor(step_params(inst).q_total + 0.5));
}

/// (U_G)^q for real q, as exp(-i H_G tau q). Agrees with integer matrix
/// powers of grover_step exactly (no phase freedom).
inline Matrix2 grover_power(const SearchInstance& inst, double q) {
  return rotation_unitary(AxisAngle(inst.grover_axis(), q * inst.grover_angle()));
}

inline constexpr double kSearchTimeSlack = 1e-12;

inline void require_in_first_branch(const SearchInstance& inst, double t, const char* what) {
  const double big_t = inst.search_time();
  if (!(t >= 0.0 && t <= big_t * (1.0 + kSearchTimeSlack))) {
    throw ValidationError(std::string(what) + ": t must lie in [0, T] with T = (pi/2) sqrt(N)");
  }
}

/// Q_t and beta for U_C(t) = exp(i beta s3) (U_G)^{Q_t} exp(i (pi/2 + beta) s3).
/// Principal branches only, so t is restricted to [0, T].
inline EquivalenceParams equivalence_params(const SearchInstance& inst, double t) {
  require_in_first_branch(inst, t, "equivalence_params");
  const double x = t / inst.sqrt_n();
  const double half_alpha = std::asin(inst.overlap());
  const double s = std::min(1.0, std::sqrt((inst.n() - 1.0) / inst.n()) * std::sin(x));
  const double qt = std::asin(s) / (2.0 * half_alpha);
  const double beta = -0.25 * std::numbers::pi - 0.5 * std::atan(std::tan(x) / inst.sqrt_n());
  return {qt, beta};
}

/// exp(i theta sigma_3).
inline Matrix2 sigma3_phase(double theta) {
  Matrix2 m = Matrix2::Zero();
  m(0, 0) = std::polar(1.0, theta);
  m(1, 1) = std::polar(1.0, -theta);
  return m;
}

/// Right-hand side of the fractional equivalence identity at time t.
inline Matrix2 equivalence_rhs(const SearchInstance& inst, double t) {
  const EquivalenceParams p = equivalence_params(inst, t);
  return sigma3_phase(p.beta) * grover_power(inst, p.qt) *
         sigma3_phase(0.5 * std::numbers::pi + p.beta);
}

inline double equivalence_residual(const SearchInstance& inst, double t) {
  return phase_aligned_distance(evolve_continuous(inst, t), equivalence_rhs(inst, t));
}

/// U_C(T) against i (1 - 2|t><t|) (U_G)^{Q_T}.
inline double endpoint_residual(const SearchInstance& inst) {
  const Matrix2 rhs = kI * reflection(inst.target_state()) * grover_power(inst, step_params(inst).q_total);
  return phase_aligned_distance(evolve_continuous(inst, inst.search_time()), rhs);
}

}  // namespace projevo
