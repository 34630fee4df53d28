/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "icr/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "icr/errors.hpp"

namespace icr::pipeline {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

const char* kpi_name(Kpi k) {
  switch (k) {
    case Kpi::cqi:
      return "cqi";
    case Kpi::sinr:
      return "sinr";
    case Kpi::load:
      return "load";
  }
  return "?";
}

const char* direction_name(Direction d) {
  switch (d) {
    case Direction::maximize:
      return "maximize";
    case Direction::minimize:
      return "minimize";
    case Direction::reach_threshold:
      return "reach-threshold";
  }
  return "?";
}

const char* function_name(SonFunction f) {
  switch (f) {
    case SonFunction::cco:
      return "CCO";
    case SonFunction::icic:
      return "ICIC";
    case SonFunction::mlb:
      return "MLB";
  }
  return "?";
}

const char* ncp_name(Ncp n) {
  switch (n) {
    case Ncp::tilt:
      return "tilt";
    case Ncp::tx_power:
      return "tx-power";
  }
  return "?";
}

std::optional<Kpi> parse_kpi(std::string_view name) {
  const std::string k = lower(name);
  if (k == "cqi" || k == "coverage") return Kpi::cqi;
  if (k == "sinr" || k == "capacity" || k == "interference") return Kpi::sinr;
  if (k == "load" || k == "mobility-load") return Kpi::load;
  return std::nullopt;
}

std::optional<Direction> parse_direction(std::string_view name) {
  const std::string d = lower(name);
  if (d == "maximize" || d == "max") return Direction::maximize;
  if (d == "minimize" || d == "min") return Direction::minimize;
  if (d == "reach-threshold" || d == "reach_threshold" || d == "reach") {
    return Direction::reach_threshold;
  }
  return std::nullopt;
}

std::span<const CatalogEntry> catalog() {
  // Coverage KPIs steer CCO, interference/capacity KPIs steer ICIC (both can
  // act through tilt or transmission power); load balancing only retunes
  // transmission power in this profile.
  static constexpr CatalogEntry kCatalog[] = {
      {Kpi::cqi, SonFunction::cco, Ncp::tilt},
      {Kpi::cqi, SonFunction::cco, Ncp::tx_power},
      {Kpi::sinr, SonFunction::icic, Ncp::tilt},
      {Kpi::sinr, SonFunction::icic, Ncp::tx_power},
      {Kpi::load, SonFunction::mlb, Ncp::tx_power},
  };
  return kCatalog;
}

KpiSpec identify(const Intent& intent) {
  const auto kpi = parse_kpi(intent.kpi_name);
  if (!kpi) {
    throw ValidationError("intent '" + intent.id + "': KPI '" + intent.kpi_name +
                          "' is not in the vocabulary (cqi, sinr, load)");
  }
  if (intent.direction == Direction::reach_threshold && !intent.goal_value) {
    throw ValidationError("intent '" + intent.id + "': reach-threshold needs a goal value");
  }
  if (!(intent.priority_weight >= 0.0)) {
    throw ValidationError("intent '" + intent.id + "': priority must be >= 0");
  }
  return {*kpi, intent.direction, intent.goal_value};
}

FunctionAssignment assign(const KpiSpec& spec, Ncp profile) {
  for (const auto& entry : catalog()) {
    if (entry.kpi == spec.kpi && entry.ncp == profile) return {entry.function, entry.ncp};
  }
  throw ValidationError(std::string("no function can tune '") + ncp_name(profile) +
                        "' for KPI '" + kpi_name(spec.kpi) + "'");
}

double estimate_target(const FunctionAssignment& assignment, const KpiSpec& spec,
                       const UtilityCurve& utility, Interval domain, double resolution,
                       const SampledSeries* raw) {
  (void)assignment;
  switch (spec.direction) {
    case Direction::maximize:
      return bargain::individual_optimum(utility, domain, resolution);
    case Direction::minimize: {
      // Smallest parameter attaining the curve minimum.
      const auto grid_points = grid::refined_grid(domain, resolution);
      const auto best = grid::scan_argmax<double>(
          grid_points.size(), [&](std::size_t i) { return -utility.eval(grid_points[i]); });
      return grid_points[best.index];
    }
    case Direction::reach_threshold: {
      if (!raw) {
        throw ValidationError("reach-threshold target needs the raw KPI series");
      }
      if (!spec.goal_value) throw ValidationError("reach-threshold target needs a goal value");
      const double goal = *spec.goal_value;
      const auto& xs = raw->parameters;
      const auto& ys = raw->values;
      if (xs.size() < 2 || xs.size() != ys.size()) {
        throw ValidationError("raw KPI series needs >= 2 aligned points");
      }
      if (ys.front() >= goal) return std::max(xs.front(), domain.lo);
      for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        if (ys[i + 1] >= goal) {
          if (ys[i + 1] == ys[i]) return xs[i + 1];
          // First crossing within the segment.
          return xs[i] + (goal - ys[i]) / (ys[i + 1] - ys[i]) * (xs[i + 1] - xs[i]);
        }
      }
      throw InfeasibleGoal("goal " + std::to_string(goal) + " unreachable; best achievable is " +
                               std::to_string(raw->max_value()),
                           raw->max_value());
    }
  }
  throw ValidationError("unknown goal direction");
}

ConflictCase detect_conflict(std::span<const FunctionAssignment> assignments,
                             std::span<const double> targets, double resolution) {
  if (assignments.size() < 2 || assignments.size() != targets.size()) {
    throw ValidationError("conflict detection needs >= 2 resolved intents");
  }
  ConflictCase out;
  out.ncp = assignments.front().ncp;
  out.targets.assign(targets.begin(), targets.end());
  bool shared = true;
  for (const auto& a : assignments) shared = shared && a.ncp == out.ncp;
  if (!shared) return out;  // disjoint parameters: nothing to bargain over

  double lo = targets.front(), hi = targets.front();
  for (const double t : targets) {
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  if (hi - lo > resolution) out.kind = ConflictKind::direct_target;
  return out;
}

ArbitrationReport decide(const ConflictCase& conflict,
                         const std::vector<std::pair<std::string, UtilityCurve>>& curves,
                         const std::vector<double>& priorities,
                         const std::vector<Method>& methods, Interval domain, double resolution,
                         bargain::Exec exec) {
  if (conflict.kind != ConflictKind::direct_target) {
    throw ValidationError("no direct-target conflict: apply the estimated targets directly");
  }
  if (curves.size() != priorities.size() || curves.size() < 2) {
    throw ValidationError("decide needs one curve and one priority per intent");
  }
  double prio_sum = 0.0;
  for (const double p : priorities) {
    if (!(p >= 0.0)) throw ValidationError("priorities must be >= 0");
    prio_sum += p;
  }
  if (!(prio_sum > 0.0)) throw ValidationError("at least one priority must be positive");

  std::vector<bargain::Player> players;
  players.reserve(curves.size());
  for (std::size_t i = 0; i < curves.size(); ++i) {
    players.push_back({curves[i].first, curves[i].second,
                       curves[i].second.min_on(domain.lo, domain.hi),
                       priorities[i] / prio_sum});
  }
  const bargain::BargainingProblem problem(std::move(players), domain, resolution);
  return bargain::arbitrate(problem, methods, exec);
}

}  // namespace icr::pipeline
