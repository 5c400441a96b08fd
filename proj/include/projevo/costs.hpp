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

// Complexity accounting for the two ways of running search as Hamiltonian
// evolution: small-step Trotter (cost ~ t^2 ||E2|| / eps) against
// reflection steps amplified by majority vote (cost ~ t log(1/eps) / log N).
// All costs are in abstract units; the Theta-constants are fixed to 1.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>

#include "projevo/amplifier.hpp"
#include "projevo/search_models.hpp"
#include "projevo/trotter.hpp"

namespace projevo {

/// Oracle queries charged per step. Defaults: two per Trotter step of H_C
/// (the |t><t| exponential), one per Grover step.
struct QueryConvention {
  double per_trotter_step = 2.0;
  double per_grover_step = 1.0;
};

struct CostModel {
  double t;
  double eps;
  std::uint64_t n;       ///< database / Hilbert-space size N
  std::uint64_t terms;   ///< l, number of Hamiltonian terms
  int degree;            ///< d, graph degree
  double step_cost = 1.0;         ///< C, per Trotter step
  double grover_step_cost = 1.0;  ///< C_G, per Grover step
  QueryConvention convention{};

  void validate() const {
    require(t > 0.0, "CostModel: t must be > 0");
    require(eps > 0.0 && eps < 1.0, "CostModel: eps must lie in (0, 1)");
    require(n >= 2, "CostModel: N must be >= 2");
    require(terms >= 1, "CostModel: l must be >= 1");
    require(degree >= 1, "CostModel: d must be >= 1");
    require(step_cost > 0.0 && grover_step_cost > 0.0, "CostModel: step costs must be > 0");
  }

  /// m = log2 N.
  [[nodiscard]] double qubits() const { return std::log2(static_cast<double>(n)); }
};

struct RegisterWidth {
  int bits;          ///< b = ceil(log2(n l / eps))
  double step_cost;  ///< C = m b^3
};

/// Register width making n l 2^-b of order eps, and the per-step cost it implies.
inline RegisterWidth register_width(std::uint64_t steps, std::uint64_t terms, double eps, double qubits = 1.0) {
  require(steps >= 1 && terms >= 1, "register_width: n and l must be >= 1");
  require(eps > 0.0 && eps < 1.0, "register_width: eps must lie in (0, 1)");
  const double x = std::log2(static_cast<double>(steps)) + std::log2(static_cast<double>(terms)) - std::log2(eps);
  const int b = std::max(1, static_cast<int>(std::ceil(x - 1e-12)));
  return {b, qubits * static_cast<double>(b) * b * b};
}

struct TrotterCost {
  double norm_e2;
  double steps_exact;     ///< t^2 ||E2|| / eps
  std::uint64_t steps;    ///< ceil of the above, >= 1
  double dt;
  double queries;
  double cost;            ///< t^2 (||E2|| / eps) C
};

inline TrotterCost trotter_complexity(const CostModel& cm, double norm_e2) {
  cm.validate();
  require(norm_e2 >= 0.0, "trotter_complexity: ||E2|| must be >= 0");
  const double exact = cm.t * cm.t * norm_e2 / cm.eps;
  const std::uint64_t steps = exact > 0.0 ? TrotterPlan::ceil_steps(exact) : 1;
  return {norm_e2, exact, steps, cm.t / static_cast<double>(steps),
          static_cast<double>(steps) * cm.convention.per_trotter_step, exact * cm.step_cost};
}

/// Odd run count from the logarithmic estimate: ceil(R/2) >= -log eps / log N,
/// i.e. R = 2 ceil(-log eps / log N) - 1, at least 1.
inline std::uint64_t majority_runs_log(std::uint64_t n, double eps) {
  require(n >= 2, "majority_runs_log: N must be >= 2");
  require(eps > 0.0 && eps < 1.0, "majority_runs_log: eps must lie in (0, 1)");
  const double ratio = -std::log(eps) / std::log(static_cast<double>(n));
  const auto half = static_cast<std::uint64_t>(std::max(1.0, std::ceil(ratio - 1e-12)));
  return 2 * half - 1;
}

/// Smallest odd R with 2^(R-1) / N^ceil(R/2) <= eps.
inline std::uint64_t majority_runs_exact(std::uint64_t n, double eps, std::uint64_t max_runs = 100'001) {
  require(eps > 0.0, "majority_runs_exact: eps must be > 0");
  for (std::uint64_t r = 1; r <= max_runs; r += 2)
    if (grover_majority_bound(n, r) <= eps) return r;
  throw BudgetExceeded("majority_runs_exact: bound not reached below the run cap");
}

struct GroverCost {
  std::optional<double> qt;  ///< Q_t when t lies in [0, T]
  double steps_per_run;      ///< t / 2
  std::uint64_t runs;        ///< R, odd
  double queries;
  double cost;               ///< (t/2) R C_G
};

inline GroverCost grover_complexity(const CostModel& cm) {
  cm.validate();
  const SearchInstance inst(cm.n);
  std::optional<double> qt;
  if (cm.t <= inst.search_time()) qt = equivalence_params(inst, cm.t).qt;
  const std::uint64_t runs = majority_runs_log(cm.n, cm.eps);
  const double per_run = 0.5 * cm.t;
  return {qt, per_run, runs, per_run * static_cast<double>(runs) * cm.convention.per_grover_step,
          per_run * static_cast<double>(runs) * cm.grover_step_cost};
}

struct CostComparison {
  CostModel model;
  TrotterCost trotter;
  GroverCost grover;
  RegisterWidth trotter_register;
  RegisterWidth grover_register;

  [[nodiscard]] double ratio() const { return grover.cost / trotter.cost; }
};

/// Both complexities with per-step costs taken from the register widths:
/// n l exponentials for Trotter, 2 Q_t (i.e. t/2 steps of two reflections)
/// for Grover.
inline CostComparison compare_costs(CostModel cm, double norm_e2) {
  cm.validate();
  const TrotterCost first = trotter_complexity(cm, norm_e2);
  const RegisterWidth tr = register_width(first.steps, cm.terms, cm.eps, cm.qubits());
  const auto grover_exps = static_cast<std::uint64_t>(std::max(1.0, std::ceil(0.5 * cm.t - 1e-12)));
  const RegisterWidth gr = register_width(grover_exps, 2, cm.eps, cm.qubits());
  cm.step_cost = tr.step_cost;
  cm.grover_step_cost = gr.step_cost;
  return {cm, trotter_complexity(cm, norm_e2), grover_complexity(cm), tr, gr};
}

}  // namespace projevo
