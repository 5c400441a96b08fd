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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "projevo/pauli_bloch.hpp"
#include "projevo/search_models.hpp"

namespace projevo {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(PauliDecompose, Identity) {
  const PauliVector p = pauli_decompose(Matrix2::Identity());
  EXPECT_NEAR(std::abs(p.a0 - 1.0), 0.0, 1e-15);
  for (const auto& c : p.a) EXPECT_EQ(c, cplx{});
}

TEST(PauliDecompose, ContinuousHamiltonianAtFour) {
  Matrix2 m;
  m << 1.25, std::sqrt(3.0) / 4.0, std::sqrt(3.0) / 4.0, 0.75;
  const PauliVector p = pauli_decompose(m);
  EXPECT_NEAR(p.a0.real(), 1.0, 1e-15);
  EXPECT_NEAR(p.a[0].real(), std::sqrt(3.0) / 4.0, 1e-15);
  EXPECT_NEAR(std::abs(p.a[1]), 0.0, 1e-15);
  EXPECT_NEAR(p.a[2].real(), 0.25, 1e-15);
  EXPECT_TRUE(p.is_real());
}

TEST(PauliDecompose, GroverStepHasImaginarySigma2) {
  const PauliVector p = pauli_decompose(grover_step(SearchInstance(4)));
  EXPECT_NEAR(std::abs(p.a0 - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(p.a[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(p.a[1] - cplx(0.0, std::sqrt(3.0) / 2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(p.a[2]), 0.0, 1e-15);
  EXPECT_FALSE(p.is_real());
}

TEST(PauliDecompose, RoundTripOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Matrix2 m = oracle::random_matrix(rng, 2);
    EXPECT_LE((pauli_decompose(m).to_matrix() - m).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(PauliDecompose, HermitianGivesRealCoefficients) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const Matrix2 m = oracle::random_matrix(rng, 2);
    EXPECT_TRUE(pauli_decompose(m + m.adjoint()).is_real());
  }
}

TEST(RotationUnitary, ZeroAngleIsIdentity) {
  EXPECT_LE((rotation_unitary(AxisAngle({0, 0, 1}, 0.0)) - Matrix2::Identity()).norm(), 1e-15);
}

TEST(RotationUnitary, HalfTurnAboutY) {
  Matrix2 expected;
  expected << 0.0, -1.0, 1.0, 0.0;
  EXPECT_LE((rotation_unitary(AxisAngle({0, 1, 0}, kPi)) - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(RotationUnitary, FullTurnIsMinusIdentity) {
  const Matrix2 u = rotation_unitary(AxisAngle(Vec3(1, 2, 2).normalized(), 2.0 * kPi));
  EXPECT_LE((u + Matrix2::Identity()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(RotationUnitary, MatchesExponentiatedContinuousEvolution) {
  const SearchInstance inst(4);
  const double t = kPi;
  const Matrix2 u = rotation_unitary(AxisAngle(inst.continuous_axis(), 2.0 * t / inst.sqrt_n()));
  // exp(-i H_C t) carries the global phase e^{-it} of the identity part.
  const Matrix reference = oracle::expm(hamiltonian_continuous(inst).to_matrix(), t) * std::polar(1.0, t);
  EXPECT_LE((Matrix(u) - reference).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(RotationUnitary, RejectsNonUnitAxis) {
  EXPECT_THROW(AxisAngle({1.0 + 1e-9, 0.0, 0.0}, 1.0), ValidationError);
  EXPECT_THROW(AxisAngle({0.5, 0.0, 0.0}, 1.0), ValidationError);
  EXPECT_NO_THROW(AxisAngle({1.0 + 1e-12, 0.0, 0.0}, 1.0));
}

TEST(RotationUnitary, InverseComposesToIdentity) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> ang(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const AxisAngle r(Vec3(nd(rng), nd(rng), nd(rng)).normalized(), ang(rng));
    const Matrix2 prod = rotation_unitary(r) * rotation_unitary(r.inverse());
    EXPECT_LE((prod - Matrix2::Identity()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_TRUE(is_unitary(rotation_unitary(r), 1e-12));
  }
}

TEST(RotationUnitary, ActsOnBlochSphereByRodrigues) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> ang(-7.0, 7.0);
  for (int i = 0; i < 500; ++i) {
    const AxisAngle r(Vec3(nd(rng), nd(rng), nd(rng)).normalized(), ang(rng));
    const Vector2 psi = oracle::random_state(rng, 2);
    const Vector2 moved = rotation_unitary(r) * psi;
    EXPECT_LE((bloch_point(moved) - rotate_vector(r, bloch_point(psi))).norm(), 1e-10);
  }
}

TEST(PhaseAlignedDistance, Identical) {
  const Matrix2 id = Matrix2::Identity();
  EXPECT_NEAR(phase_aligned_distance(id, id), 0.0, 1e-15);
}

TEST(PhaseAlignedDistance, PureGlobalPhase) {
  EXPECT_NEAR(phase_aligned_distance(Matrix2(Matrix2::Identity()), Matrix2(kI * Matrix2::Identity())), 0.0, 1e-15);
}

TEST(PhaseAlignedDistance, IdentityAgainstSigma1) {
  const double searched = oracle::phase_distance_search(Matrix2::Identity(), pauli::sigma1());
  EXPECT_NEAR(searched, std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(phase_aligned_distance(Matrix2::Identity(), pauli::sigma1()), searched, 1e-9);
}

TEST(PhaseAlignedDistance, AgreesWithGridSearchOnRandomUnitaries) {
  std::mt19937_64 rng(5);
  for (int dim : {2, 3, 4}) {
    for (int i = 0; i < 20; ++i) {
      const Matrix u = oracle::random_unitary(rng, dim);
      const Matrix v = oracle::random_unitary(rng, dim);
      EXPECT_NEAR(phase_aligned_distance(u, v), oracle::phase_distance_search(u, v), 1e-9);
    }
  }
}

// For 2x2 unitaries with tr(V^dagger U) != 0 the minimizing phase is arg tr.
TEST(PhaseAlignedDistance, TraceArgumentIsOptimalForTwoByTwo) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 300; ++i) {
    const Matrix u = oracle::random_unitary(rng, 2);
    const Matrix v = oracle::random_unitary(rng, 2);
    const cplx tr = (v.adjoint() * u).trace();
    if (std::abs(tr) < 1e-6) continue;
    const double via_trace = spectral_norm(u - std::polar(1.0, std::arg(tr)) * v);
    EXPECT_NEAR(phase_aligned_distance(u, v), via_trace, 1e-12);
  }
}

TEST(PhaseAlignedDistance, IsPseudometric) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Matrix a = oracle::random_unitary(rng, 2);
    const Matrix b = oracle::random_unitary(rng, 2);
    const Matrix c = oracle::random_unitary(rng, 2);
    const double ab = phase_aligned_distance(a, b), ba = phase_aligned_distance(b, a);
    EXPECT_NEAR(ab, ba, 1e-12);
    EXPECT_LE(phase_aligned_distance(a, c), ab + phase_aligned_distance(b, c) + 1e-9);
    EXPECT_NEAR(phase_aligned_distance(a, std::polar(1.0, 0.7) * a), 0.0, 1e-12);
  }
}

TEST(BlochPoint, BasisStates) {
  EXPECT_LE((bloch_point({1.0, 0.0}) - Vec3(0, 0, 1)).norm(), 1e-15);
  EXPECT_LE((bloch_point({0.0, 1.0}) - Vec3(0, 0, -1)).norm(), 1e-15);
}

TEST(BlochPoint, SourceStateAtFour) {
  const Vec3 r = bloch_point(SearchInstance(4).source_state());
  EXPECT_LE((r - Vec3(std::sqrt(3.0) / 2.0, 0.0, -0.5)).norm(), 1e-15);
}

TEST(BlochPoint, UnitNormAndRejection) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) EXPECT_NEAR(bloch_point(oracle::random_state(rng, 2)).norm(), 1.0, 1e-10);
  EXPECT_THROW(bloch_point({1.0, 1.0}), ValidationError);
}

}  // namespace
}  // namespace projevo
