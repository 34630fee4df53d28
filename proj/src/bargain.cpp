/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "icr/bargain.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <string>

#include "icr/errors.hpp"

namespace icr::bargain {

const char* method_name(Method m) {
  switch (m) {
    case Method::nbs:
      return "NBS";
    case Method::wnbs:
      return "WNBS";
    case Method::ksbs:
      return "KSBS";
    case Method::sebs:
      return "SEBS";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  std::string low(name);
  std::transform(low.begin(), low.end(), low.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (low == "nbs") return Method::nbs;
  if (low == "wnbs") return Method::wnbs;
  if (low == "ksbs") return Method::ksbs;
  if (low == "sebs") return Method::sebs;
  return std::nullopt;
}

BargainingProblem::BargainingProblem(std::vector<Player> players, Interval domain,
                                     double search_resolution,
                                     std::optional<double> sebs_total_gain)
    : players_(std::move(players)),
      domain_(domain),
      resolution_(search_resolution),
      sebs_total_gain_(sebs_total_gain) {
  if (players_.size() < 2) throw ValidationError("bargaining needs at least 2 players");
  if (!(domain_.lo < domain_.hi)) throw ValidationError("empty parameter domain");
  if (!(resolution_ > 0.0) || resolution_ > domain_.hi - domain_.lo) {
    throw ValidationError("search resolution must be in (0, domain span]");
  }
  double weight_sum = 0.0;
  for (const auto& p : players_) {
    if (p.id.empty()) throw ValidationError("player id must be nonempty");
    if (p.curve.min_parameter() > domain_.lo + 1e-12 ||
        p.curve.max_parameter() < domain_.hi - 1e-12) {
      throw ValidationError("curve of player '" + p.id + "' does not span the domain");
    }
    if (!(p.weight >= 0.0)) throw ValidationError("player weight must be >= 0");
    if (p.disagreement > p.curve.max_on(domain_.lo, domain_.hi) + 1e-12) {
      throw ValidationError("player '" + p.id +
                            "' has no agreeable outcome: disagreement exceeds curve maximum");
    }
    weight_sum += p.weight;
  }
  if (std::abs(weight_sum - 1.0) > 1e-9) {
    throw ValidationError("player weights must sum to 1 (got " + std::to_string(weight_sum) + ")");
  }
}

std::vector<double> BargainingProblem::disagreement() const {
  std::vector<double> d;
  d.reserve(players_.size());
  for (const auto& p : players_) d.push_back(p.disagreement);
  return d;
}

std::vector<double> BargainingProblem::weights() const {
  std::vector<double> w;
  w.reserve(players_.size());
  for (const auto& p : players_) w.push_back(p.weight);
  return w;
}

std::vector<double> ideal_point(const BargainingProblem& problem, Exec exec) {
  const auto grid_points = grid::refined_grid(problem.domain(), problem.search_resolution());
  std::vector<double> ideal;
  ideal.reserve(problem.size());
  for (const auto& p : problem.players()) {
    const auto best = grid::scan_argmax<double>(
        grid_points.size(), [&](std::size_t i) { return p.curve.eval(grid_points[i]); }, exec);
    ideal.push_back(best.score);
  }
  return ideal;
}

double individual_optimum(const UtilityCurve& curve, Interval domain, double resolution,
                          Exec exec) {
  const auto grid_points = grid::refined_grid(domain, resolution);
  const auto best = grid::scan_argmax<double>(
      grid_points.size(), [&](std::size_t i) { return curve.eval(grid_points[i]); }, exec);
  return grid_points[best.index];
}

namespace {

// The pointwise feasibility test tolerates interpolation round-off at the
// exact crossing points.
constexpr double kFeasSlack = 1e-12;

bool all_gains_nonneg(const BargainingProblem& problem, double t) {
  for (const auto& p : problem.players()) {
    if (p.curve.eval(t) < p.disagreement - kFeasSlack) return false;
  }
  return true;
}

}  // namespace

std::vector<Interval> feasible_region(const BargainingProblem& problem) {
  const Interval dom = problem.domain();

  // Breakpoints: domain ends, every sample inside, and the exact points where
  // some player's utility crosses its disagreement level.
  std::vector<double> bps{dom.lo, dom.hi};
  for (const auto& p : problem.players()) {
    const auto& samples = p.curve.samples();
    for (const auto& s : samples) {
      if (s.parameter > dom.lo && s.parameter < dom.hi) bps.push_back(s.parameter);
    }
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
      double x0 = samples[i].parameter, x1 = samples[i + 1].parameter;
      if (x1 <= dom.lo || x0 >= dom.hi) continue;
      x0 = std::max(x0, dom.lo);
      x1 = std::min(x1, dom.hi);
      const double v0 = p.curve.eval(x0) - p.disagreement;
      const double v1 = p.curve.eval(x1) - p.disagreement;
      if ((v0 < 0.0 && v1 > 0.0) || (v0 > 0.0 && v1 < 0.0)) {
        bps.push_back(x0 + v0 / (v0 - v1) * (x1 - x0));
      }
    }
  }
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end(),
                        [](double a, double b) { return std::abs(a - b) <= 1e-12; }),
            bps.end());

  std::vector<Interval> region;
  auto extend = [&region](double lo, double hi) {
    if (!region.empty() && lo <= region.back().hi + 1e-12) {
      region.back().hi = std::max(region.back().hi, hi);
    } else {
      region.push_back({lo, hi});
    }
  };

  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const double a = bps[i], b = bps[i + 1];
    // Between adjacent breakpoints the minimum gain has constant sign, so the
    // midpoint decides the whole open segment.
    if (all_gains_nonneg(problem, 0.5 * (a + b))) {
      extend(a, b);
    } else if (all_gains_nonneg(problem, a)) {
      extend(a, a);  // isolated touch point
    }
  }
  if (!bps.empty() && all_gains_nonneg(problem, bps.back()) &&
      (region.empty() || region.back().hi < bps.back() - 1e-12)) {
    extend(bps.back(), bps.back());
  }

  if (region.empty()) {
    throw NoFeasibleAgreement("no control-parameter value satisfies every disagreement level",
                              problem.disagreement());
  }
  return region;
}

double jain_index(std::span<const double> x) {
  if (x.empty()) throw DomainError("jain_index: empty allocation");
  double max_v = 0.0;
  for (const double v : x) {
    if (!(v >= 0.0)) throw DomainError("jain_index: negative allocation entry");
    max_v = std::max(max_v, v);
  }
  if (max_v == 0.0) throw DomainError("jain_index: undefined for the all-zero allocation");
  // Scaling by the maximum keeps the algebra exact for uniform and
  // single-nonzero allocations; the index itself is scale-invariant.
  double sum = 0.0, sum_sq = 0.0;
  for (const double v : x) {
    const double y = v / max_v;
    sum += y;
    sum_sq += y * y;
  }
  return (sum * sum) / (static_cast<double>(x.size()) * sum_sq);
}

Solution solve(const BargainingProblem& problem, Method method, Exec exec) {
  switch (method) {
    case Method::nbs:
      return solve_nbs(problem, exec);
    case Method::wnbs:
      return solve_wnbs(problem, exec);
    case Method::ksbs:
      return solve_ksbs(problem, exec);
    case Method::sebs:
      return solve_sebs(problem, exec);
  }
  throw ValidationError("unknown method");
}

ArbitrationReport arbitrate(const BargainingProblem& problem, const std::vector<Method>& methods,
                            Exec exec) {
  if (methods.empty()) throw ValidationError("arbitrate: no methods requested");

  ArbitrationReport report;
  for (const Method m : kMethodOrder) {
    if (std::find(methods.begin(), methods.end(), m) == methods.end()) continue;
    try {
      report.solutions.push_back(solve(problem, m, exec));
    } catch (const std::exception& e) {
      throw SolverError(method_name(m), e.what());
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < report.solutions.size(); ++i) {
    if (report.solutions[i].jfi > report.solutions[best].jfi) best = i;
  }
  report.chosen_method = report.solutions[best].method;
  report.chosen_parameter = report.solutions[best].parameter;
  return report;
}

}  // namespace icr::bargain
