/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "icr/curve.hpp"
#include "icr/grid.hpp"

namespace icr::bargain {

using grid::Exec;
using grid::Interval;

enum class Method { nbs, wnbs, ksbs, sebs };

/// Canonical report tag ("NBS", "WNBS", "KSBS", "SEBS").
const char* method_name(Method m);

/// Parses a method tag, case-insensitive. Returns nullopt on unknown names.
std::optional<Method> parse_method(std::string_view name);

/// Fixed order used for deterministic tie-breaking across methods.
inline constexpr Method kMethodOrder[] = {Method::nbs, Method::wnbs, Method::ksbs, Method::sebs};

struct Player {
  std::string id;
  UtilityCurve curve;
  double disagreement = 0.0;  // utility received without an agreement
  double weight = 0.0;        // bargaining power; weights sum to 1
};

/// The negotiation instance: players' utility curves over one shared scalar
/// control parameter, their disagreement utilities and weights, the parameter
/// domain, and the grid resolution the solvers search at.
class BargainingProblem {
 public:
  BargainingProblem(std::vector<Player> players, Interval domain, double search_resolution = 0.01,
                    std::optional<double> sebs_total_gain = std::nullopt);

  const std::vector<Player>& players() const { return players_; }
  Interval domain() const { return domain_; }
  double search_resolution() const { return resolution_; }
  std::optional<double> sebs_total_gain() const { return sebs_total_gain_; }
  std::size_t size() const { return players_.size(); }

  std::vector<double> disagreement() const;
  std::vector<double> weights() const;

 private:
  std::vector<Player> players_;
  Interval domain_;
  double resolution_;
  std::optional<double> sebs_total_gain_;
};

struct Solution {
  Method method;
  double parameter = 0.0;         // the agreed control-parameter value
  std::vector<double> utilities;  // u_i at parameter
  std::vector<double> gains;      // u_i - d_i, all >= 0
  double objective = 0.0;         // method-specific: product / weighted product /
                                  // common ratio / entropy
  double jfi = 0.0;
  bool exact = true;                      // false: nearest point to an unattainable condition
  std::optional<double> residual;         // KSBS equal-ratio spread at the solution
  std::string note;                       // fallbacks and qualifiers, empty if none
};

struct ArbitrationReport {
  std::vector<Solution> solutions;  // in canonical method order
  Method chosen_method;
  double chosen_parameter = 0.0;
};

/// Per-player maximum utility over the domain, scanned at the problem's
/// search resolution.
std::vector<double> ideal_point(const BargainingProblem& problem, Exec exec = Exec::parallel);

/// Smallest parameter attaining the curve's maximum on the refined grid.
double individual_optimum(const UtilityCurve& curve, Interval domain, double resolution = 0.01,
                          Exec exec = Exec::parallel);

/// Maximal sub-intervals of the domain where every player's gain is
/// nonnegative. Degenerate intervals (lo == hi) are possible. Throws
/// NoFeasibleAgreement (carrying the disagreement vector) when empty.
std::vector<Interval> feasible_region(const BargainingProblem& problem);

Solution solve_nbs(const BargainingProblem& problem, Exec exec = Exec::parallel);
Solution solve_wnbs(const BargainingProblem& problem, Exec exec = Exec::parallel);
Solution solve_ksbs(const BargainingProblem& problem, Exec exec = Exec::parallel);
Solution solve_sebs(const BargainingProblem& problem, Exec exec = Exec::parallel);

Solution solve(const BargainingProblem& problem, Method method, Exec exec = Exec::parallel);

/// Jain's fairness index (sum x)^2 / (n sum x^2). Requires a nonempty,
/// nonnegative, not-all-zero allocation; always lies in [1/n, 1].
double jain_index(std::span<const double> x);

/// Runs the requested methods and picks the one with the highest fairness
/// index; ties resolve in the fixed order NBS < WNBS < KSBS < SEBS. A method
/// failure aborts with SolverError naming the method.
ArbitrationReport arbitrate(const BargainingProblem& problem, const std::vector<Method>& methods,
                            Exec exec = Exec::parallel);

}  // namespace icr::bargain
