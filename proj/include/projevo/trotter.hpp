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

// First-order Lie-Trotter evolution over a list of exactly exponentiable
// Hermitian terms, the leading commutator error estimate and an error-budget
// planner built on it.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "projevo/linalg.hpp"
#include "projevo/parallel.hpp"

namespace projevo {

inline constexpr double kHermitianTolerance = 1e-12;

struct Term {
  std::string label;
  Matrix matrix;
};

/// H = sum_i H_i with every H_i Hermitian. Term order is the order the
/// Trotter product uses.
class HermitianTermSet {
public:
  HermitianTermSet(Eigen::Index dimension, std::vector<Term> terms)
      : dimension_(dimension), terms_(std::move(terms)) {
    require(dimension_ >= 1, "HermitianTermSet: dimension must be >= 1");
    require(!terms_.empty(), "HermitianTermSet: at least one term is required");
    for (const auto& t : terms_) {
      require(t.matrix.rows() == dimension_ && t.matrix.cols() == dimension_,
              "HermitianTermSet: term '" + t.label + "' has the wrong shape");
      require(is_hermitian(t.matrix, kHermitianTolerance),
              "HermitianTermSet: term '" + t.label + "' is not Hermitian");
    }
  }

  [[nodiscard]] Eigen::Index dimension() const noexcept { return dimension_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] const Term& operator[](std::size_t i) const { return terms_[i]; }

  [[nodiscard]] Matrix total() const {
    Matrix h = Matrix::Zero(dimension_, dimension_);
    for (const auto& t : terms_) h += t.matrix;
    return h;
  }

  /// max |(sum_i H_i - h)_{jk}|
  [[nodiscard]] double reconstruction_error(const Matrix& h) const {
    return (total() - h).cwiseAbs().maxCoeff();
  }

  [[nodiscard]] std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& t : terms_) out.push_back(t.label);
    return out;
  }

private:
  Eigen::Index dimension_;
  std::vector<Term> terms_;
};

/// n steps of size dt covering total time t.
class TrotterPlan {
public:
  TrotterPlan(double total_time, std::uint64_t steps, std::optional<double> error_budget = {})
      : total_time_(total_time), steps_(steps), error_budget_(error_budget) {
    require(total_time > 0.0 && std::isfinite(total_time), "TrotterPlan: total time must be > 0");
    require(steps >= 1, "TrotterPlan: step count must be >= 1");
    require(!error_budget || *error_budget > 0.0, "TrotterPlan: error budget must be > 0");
  }

  /// Smallest step count whose step does not exceed max_dt.
  static TrotterPlan with_max_step(double total_time, double max_dt) {
    require(max_dt > 0.0, "TrotterPlan: step must be > 0");
    return {total_time, ceil_steps(total_time / max_dt)};
  }

  [[nodiscard]] double total_time() const noexcept { return total_time_; }
  [[nodiscard]] std::uint64_t steps() const noexcept { return steps_; }
  [[nodiscard]] double dt() const noexcept { return total_time_ / static_cast<double>(steps_); }
  [[nodiscard]] std::optional<double> error_budget() const noexcept { return error_budget_; }

  /// ceil(x), forgiving round-off that lands just above an integer.
  static std::uint64_t ceil_steps(double x) {
    require(std::isfinite(x) && x > 0.0, "TrotterPlan: step count must be finite");
    const double r = std::round(x);
    if (x > r && x - r <= 1e-12 * std::max(1.0, r)) return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(r));
    return static_cast<std::uint64_t>(std::ceil(x));
  }

private:
  double total_time_;
  std::uint64_t steps_;
  std::optional<double> error_budget_;
};

/// Spectral norm of E2 = (i/2) sum_{i<j} [H_i, H_j] in its dt -> 0 limit.
struct CommutatorEstimate {
  double norm_e2;
};

/// exp(-i H_i tau), exact; keeps the block structure of H_i.
inline Matrix exact_term_exponential(const Matrix& h, double tau) { return exp_hermitian(h, tau); }

/// prod_i exp(-i H_i dt), left to right in declared order.
inline Matrix trotter_step(const HermitianTermSet& terms, double dt) {
  Matrix step = Matrix::Identity(terms.dimension(), terms.dimension());
  for (const auto& t : terms.terms()) step = step * exact_term_exponential(t.matrix, dt);
  return step;
}

inline Matrix trotter_evolve(const HermitianTermSet& terms, const TrotterPlan& plan) {
  return matrix_power(trotter_step(terms, plan.dt()), plan.steps());
}

/// exp(-i H t) for the summed Hamiltonian.
inline Matrix exact_evolution(const HermitianTermSet& terms, double t) {
  return exp_hermitian(terms.total(), t);
}

inline CommutatorEstimate commutator_error(const HermitianTermSet& terms) {
  const Eigen::Index d = terms.dimension();
  Matrix acc = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      acc += commutator(terms[i].matrix, terms[j].matrix);
  return {0.5 * spectral_norm(acc)};
}

/// Leading-order error bound t ||E2|| dt of a plan.
inline double first_order_bound(const TrotterPlan& plan, const CommutatorEstimate& e2) {
  return plan.total_time() * e2.norm_e2 * plan.dt();
}

struct PlannerOptions {
  /// Measured error is expected within slack * epsilon; covers the O(dt)
  /// correction dropped from E2.
  double slack = 2.0;
  std::uint64_t max_steps = 10'000'000;
  /// Estimates at or below this are treated as commuting.
  double commuting_tolerance = 1e-14;
};

struct BudgetPlan {
  TrotterPlan plan;
  CommutatorEstimate estimate;
  /// eps / (t ||E2||) before rounding to an integer step count; infinite for
  /// commuting terms.
  double dt_bound;
};

/// Largest dt with t ||E2|| dt <= eps, rounded down so t/dt is an integer.
inline BudgetPlan plan_for_budget(const HermitianTermSet& terms, double t, double eps,
                                  const PlannerOptions& opts = {}) {
  require(t > 0.0, "plan_for_budget: t must be > 0");
  require(eps > 0.0, "plan_for_budget: eps must be > 0");
  const CommutatorEstimate e2 = commutator_error(terms);
  if (e2.norm_e2 <= opts.commuting_tolerance) {
    return {TrotterPlan(t, 1, eps), e2, std::numeric_limits<double>::infinity()};
  }
  const double dt_bound = eps / (t * e2.norm_e2);
  const double needed = t / dt_bound;
  if (!(needed <= static_cast<double>(opts.max_steps))) {
    throw BudgetExceeded("plan_for_budget: " + std::to_string(needed) +
                         " steps needed, cap is " + std::to_string(opts.max_steps));
  }
  return {TrotterPlan(t, TrotterPlan::ceil_steps(needed), eps), e2, dt_bound};
}

struct TelescopingCheck {
  double power_distance;  ///< ||X^n - Y^n||
  double bound;           ///< n ||X - Y||
};

inline TelescopingCheck telescoping_bound_check(const Matrix& x, const Matrix& y, std::uint64_t n) {
  require(n >= 1, "telescoping_bound_check: n must be >= 1");
  require(is_unitary(x, 1e-10) && is_unitary(y, 1e-10),
          "telescoping_bound_check: inputs must be unitary");
  return {spectral_norm(matrix_power(x, n) - matrix_power(y, n)),
          static_cast<double>(n) * spectral_norm(x - y)};
}

/// |<psi_n|H|psi_n> - <psi_0|H|psi_0>| after Trotter evolution. The product
/// formula does not conserve energy; this is reported, never asserted.
inline double energy_drift(const HermitianTermSet& terms, const TrotterPlan& plan, const Vector& psi0) {
  require(psi0.size() == terms.dimension(), "energy_drift: state has the wrong dimension");
  const Matrix h = terms.total();
  const Vector psi = trotter_evolve(terms, plan) * psi0;
  const double e0 = psi0.dot(h * psi0).real();
  const double e1 = psi.dot(h * psi).real();
  return std::abs(e1 - e0);
}

struct ScanPoint {
  double requested_dt;
  double dt;
  std::uint64_t steps;
  double error;  ///< ||U_trotter - exp(-iHt)||
  double bound;  ///< 2 t ||E2|| dt with the default slack
};

struct ScanResult {
  std::vector<ScanPoint> points;
  CommutatorEstimate estimate;
  double slope;  ///< least-squares slope of log(error) against log(dt)
};

/// Least-squares slope of y against x.
inline double fit_slope(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size() && x.size() >= 2, "fit_slope: need at least two points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline ScanResult trotter_scan(const HermitianTermSet& terms, double t, std::span<const double> dt_grid,
                               const PlannerOptions& opts = {}, unsigned threads = 1) {
  require(dt_grid.size() >= 2, "trotter_scan: need at least two step sizes");
  const CommutatorEstimate e2 = commutator_error(terms);
  const Matrix exact = exact_evolution(terms, t);
  std::vector<ScanPoint> points(dt_grid.size());
  for (double dt : dt_grid) {
    const auto n = TrotterPlan::with_max_step(t, dt).steps();
    if (n > opts.max_steps) {
      throw BudgetExceeded("trotter_scan: dt = " + std::to_string(dt) + " needs " + std::to_string(n) +
                           " steps, cap is " + std::to_string(opts.max_steps));
    }
  }
  parallel_for(dt_grid.size(), threads, [&](std::size_t i) {
    const TrotterPlan plan = TrotterPlan::with_max_step(t, dt_grid[i]);
    const Matrix u = trotter_evolve(terms, plan);
    points[i] = {dt_grid[i], plan.dt(), plan.steps(), spectral_norm(u - exact),
                 opts.slack * first_order_bound(plan, e2)};
  });
  std::vector<double> lx, ly;
  for (const auto& p : points) {
    lx.push_back(std::log(p.dt));
    ly.push_back(std::log(p.error));
  }
  return {std::move(points), e2, fit_slope(lx, ly)};
}

}  // namespace projevo
