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

// Brute-force Grover search on the full N-dimensional state. Both
// reflections are applied as O(N) rank-one updates; no N x N operator is
// ever formed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "projevo/search_models.hpp"

namespace projevo {

inline constexpr std::uint64_t kMaxFullStateSize = std::uint64_t{1} << 22;

class FullState {
public:
  explicit FullState(std::vector<cplx> amplitudes) : amp_(std::move(amplitudes)) {
    require(amp_.size() >= 2, "FullState: need at least two amplitudes");
  }

  [[nodiscard]] std::size_t size() const noexcept { return amp_.size(); }
  [[nodiscard]] const std::vector<cplx>& amplitudes() const noexcept { return amp_; }
  [[nodiscard]] cplx operator[](std::size_t i) const { return amp_[i]; }

  [[nodiscard]] double norm() const {
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return std::sqrt(s);
  }

  [[nodiscard]] double probability(std::size_t i) const { return std::norm(amp_[i]); }

  /// -(1 - 2|s><s|)(1 - 2|t><t|) applied in place.
  void apply_grover(std::size_t target) {
    amp_[target] = -amp_[target];
    cplx mean{};
    for (const auto& a : amp_) mean += a;
    mean /= static_cast<double>(amp_.size());
    for (auto& a : amp_) a = 2.0 * mean - a;
  }

private:
  std::vector<cplx> amp_;
};

/// Every amplitude 1/sqrt(N).
inline FullState uniform_state(std::uint64_t n) {
  require(n >= 2, "uniform_state: N must be >= 2");
  require(n <= kMaxFullStateSize, "uniform_state: N exceeds the full-state cap");
  return FullState(std::vector<cplx>(n, cplx{1.0 / std::sqrt(static_cast<double>(n)), 0.0}));
}

inline FullState grover_iterate(FullState state, std::size_t target, std::uint64_t steps) {
  require(target < state.size(), "grover_iterate: target index out of range");
  for (std::uint64_t k = 0; k < steps; ++k) state.apply_grover(target);
  return state;
}

struct CurvePoint {
  std::uint64_t step;
  double probability;
};

/// |<t|psi_k>|^2 for k = 0..max_steps starting from |s>.
inline std::vector<CurvePoint> success_curve(std::uint64_t n, std::uint64_t max_steps, std::size_t target = 0) {
  require(max_steps >= 1, "success_curve: max_steps must be >= 1");
  FullState psi = uniform_state(n);
  require(target < psi.size(), "success_curve: target index out of range");
  std::vector<CurvePoint> out;
  out.reserve(max_steps + 1);
  out.push_back({0, psi.probability(target)});
  for (std::uint64_t k = 1; k <= max_steps; ++k) {
    psi.apply_grover(target);
    out.push_back({k, psi.probability(target)});
  }
  return out;
}

/// First step attaining the maximum probability.
inline CurvePoint curve_peak(const std::vector<CurvePoint>& curve) {
  require(!curve.empty(), "curve_peak: empty curve");
  CurvePoint best = curve.front();
  for (const auto& p : curve)
    if (p.probability > best.probability) best = p;
  return best;
}

/// Largest distance of a non-target amplitude from the first non-target one.
inline double non_target_spread(const FullState& psi, std::size_t target) {
  const std::size_t ref = target == 0 ? 1 : 0;
  double spread = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i)
    if (i != target) spread = std::max(spread, std::abs(psi[i] - psi[ref]));
  return spread;
}

/// Max over steps 0..steps of the deviation between the full-space state and
/// the two-dimensional model state grover_power(k)|s>. Compared quantities:
/// <t|psi>, the signed amplitude on |t_perp> and ||psi - <t|psi>|t>||.
inline double subspace_agreement(std::uint64_t n, std::uint64_t steps, std::size_t target = 0) {
  const SearchInstance inst(n);
  FullState psi = uniform_state(n);
  require(target < psi.size(), "subspace_agreement: target index out of range");
  const double perp_scale = 1.0 / std::sqrt(static_cast<double>(n - 1));
  double worst = 0.0;
  for (std::uint64_t k = 0;; ++k) {
    const Vector2 model = grover_power(inst, static_cast<double>(k)) * inst.source_state();
    cplx on_perp{};
    double rest = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
      if (i == target) continue;
      on_perp += psi[i];
      rest += std::norm(psi[i]);
    }
    on_perp *= perp_scale;
    worst = std::max({worst, std::abs(psi[target] - model(0)), std::abs(on_perp - model(1)),
                      std::abs(std::sqrt(rest) - std::abs(model(1)))});
    if (k == steps) break;
    psi.apply_grover(target);
  }
  return worst;
}

}  // namespace projevo
