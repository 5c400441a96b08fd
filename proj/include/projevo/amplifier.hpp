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

// Error suppression by repeating a search R times and taking the majority
// answer: the analytic bound for Grover's per-run error 1/N, the exact
// binomial tail for an explicit per-run error, and a seeded Monte Carlo
// estimate with a Wilson interval.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <type_traits>
#include <variant>
#include <vector>

#include "projevo/errors.hpp"
#include "projevo/parallel.hpp"
#include "projevo/philox.hpp"

namespace projevo {

inline void require_odd_runs(std::uint64_t runs) {
  require(runs >= 1 && runs % 2 == 1, "majority rule needs an odd number of runs R >= 1");
}

/// ceil(R/2): failures needed for the majority to be wrong.
inline std::uint64_t majority_threshold(std::uint64_t runs) { return (runs + 1) / 2; }

/// 2^(R-1) / N^ceil(R/2).
inline double grover_majority_bound(std::uint64_t n, std::uint64_t runs) {
  require(n >= 2, "grover_majority_bound: N must be >= 2");
  require_odd_runs(runs);
  const double h = static_cast<double>(majority_threshold(runs));
  const double denom = std::pow(static_cast<double>(n), h);
  if (std::isfinite(denom) && runs <= 1000) return std::ldexp(1.0, static_cast<int>(runs - 1)) / denom;
  return std::exp(static_cast<double>(runs - 1) * std::log(2.0) - h * std::log(static_cast<double>(n)));
}

inline double binomial_tail(double p, std::uint64_t runs) {
  require(p >= 0.0 && p <= 1.0, "binomial_tail: p must lie in [0, 1]");
  require_odd_runs(runs);
  const std::uint64_t h = majority_threshold(runs);
  double total = 0.0;
  double coeff = 1.0;  // C(R, k)
  for (std::uint64_t k = 0; k <= runs; ++k) {
    if (k > 0) coeff = coeff * static_cast<double>(runs - k + 1) / static_cast<double>(k);
    if (k >= h) total += coeff * std::pow(p, static_cast<double>(k)) * std::pow(1.0 - p, static_cast<double>(runs - k));
  }
  return total;
}

/// Per-run error model: Grover's worst case 1/N, or an explicit probability.
struct GroverError {
  std::uint64_t n;
};
struct ExplicitError {
  double p;
};
using ErrorModel = std::variant<GroverError, ExplicitError>;

inline double per_run_error(const ErrorModel& m) {
  return std::visit(
      [](const auto& e) -> double {
        if constexpr (std::is_same_v<std::decay_t<decltype(e)>, GroverError>) {
          return 1.0 / static_cast<double>(e.n);
        } else {
          return e.p;
        }
      },
      m);
}

/// Closed-form bound for the Grover model, exact tail for an explicit p.
inline double majority_bound(const ErrorModel& m, std::uint64_t runs) {
  if (const auto* g = std::get_if<GroverError>(&m)) return grover_majority_bound(g->n, runs);
  return binomial_tail(std::get<ExplicitError>(m).p, runs);
}

/// Error left after averaging R runs, 1/(N sqrt(R)).
inline double averaging_error(std::uint64_t n, std::uint64_t runs) {
  require(n >= 1 && runs >= 1, "averaging_error: N and R must be >= 1");
  return 1.0 / (static_cast<double>(n) * std::sqrt(static_cast<double>(runs)));
}

/// Smallest odd R whose Grover majority bound drops strictly below the
/// averaging error 1/(N sqrt(R)).
inline std::uint64_t majority_averaging_crossover(std::uint64_t n, std::uint64_t max_runs = 1001) {
  for (std::uint64_t r = 1; r <= max_runs; r += 2)
    if (grover_majority_bound(n, r) < averaging_error(n, r)) return r;
  throw Error("majority_averaging_crossover: no crossover below the run cap");
}

struct WilsonInterval {
  double lower;
  double upper;
};

inline constexpr double kZ95 = 1.959963984540054;

inline WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ95) {
  require(trials >= 1, "wilson_interval: need at least one trial");
  const double n = static_cast<double>(trials);
  const double ph = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (ph + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(ph * (1.0 - ph) / n + z2 / (4.0 * n * n)) / denom;
  // The endpoints are exact at 0 and n successes; avoid round-off there.
  return {successes == 0 ? 0.0 : std::max(0.0, centre - half), successes == trials ? 1.0 : std::min(1.0, centre + half)};
}

inline constexpr std::uint64_t kMinMonteCarloTrials = 10'000;

struct AmplificationPlan {
  double per_run_error;
  std::uint64_t runs;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 0;

  void validate() const {
    require(per_run_error >= 0.0 && per_run_error <= 1.0, "AmplificationPlan: p must lie in [0, 1]");
    require_odd_runs(runs);
    require(trials >= kMinMonteCarloTrials, "AmplificationPlan: need at least 1e4 trials");
  }
};

struct MajorityEstimate {
  std::uint64_t failures;
  std::uint64_t trials;
  double rate;
  WilsonInterval interval;

  /// Half-width of the Wilson interval.
  [[nodiscard]] double ci95() const { return 0.5 * (interval.upper - interval.lower); }
  [[nodiscard]] bool contains(double x) const { return interval.lower <= x && x <= interval.upper; }
};

/// Trials per shard. Shard s draws from Philox key (seed, s); trial i of the
/// shard reads counter (i, j, 0, 0) for its j-th block of four uniforms, so
/// the sample is fixed by the seed alone.
inline constexpr std::uint64_t kShardTrials = std::uint64_t{1} << 16;

inline MajorityEstimate simulate_majority(const AmplificationPlan& plan, unsigned threads = 1) {
  plan.validate();
  const std::uint64_t shards = (plan.trials + kShardTrials - 1) / kShardTrials;
  const std::uint64_t h = majority_threshold(plan.runs);
  std::vector<std::uint64_t> shard_failures(shards, 0);
  parallel_for(shards, threads, [&](std::size_t s) {
    const Philox4x64::Key key{plan.seed, s};
    const std::uint64_t begin = s * kShardTrials;
    const std::uint64_t end = std::min(plan.trials, begin + kShardTrials);
    std::uint64_t failed = 0;
    for (std::uint64_t i = 0; i < end - begin; ++i) {
      std::uint64_t bad = 0;
      Philox4x64::Counter words{};
      for (std::uint64_t j = 0; j < plan.runs; ++j) {
        if (j % 4 == 0) words = Philox4x64::block({i, j / 4, 0, 0}, key);
        if (Philox4x64::to_unit(words[j % 4]) < plan.per_run_error) ++bad;
      }
      if (bad >= h) ++failed;
    }
    shard_failures[s] = failed;
  });
  std::uint64_t failures = 0;
  for (auto f : shard_failures) failures += f;
  return {failures, plan.trials, static_cast<double>(failures) / static_cast<double>(plan.trials),
          wilson_interval(failures, plan.trials)};
}

/// One row of the amplification report.
struct AmplificationRow {
  std::uint64_t runs;
  double bound;
  double exact;
  MajorityEstimate empirical;
};

}  // namespace projevo
