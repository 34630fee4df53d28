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

#include "icr/bargain.hpp"
#include "icr/curve.hpp"

namespace icr::pipeline {

using bargain::ArbitrationReport;
using bargain::Interval;
using bargain::Method;

enum class Kpi { cqi, sinr, load };
enum class Direction { maximize, minimize, reach_threshold };
enum class SonFunction { cco, icic, mlb };
enum class Ncp { tilt, tx_power };

const char* kpi_name(Kpi k);
const char* direction_name(Direction d);
const char* function_name(SonFunction f);
const char* ncp_name(Ncp n);

/// Accepts canonical names and aliases ("coverage" -> cqi, "capacity" /
/// "interference" -> sinr, "mobility-load" -> load).
std::optional<Kpi> parse_kpi(std::string_view name);
std::optional<Direction> parse_direction(std::string_view name);

/// A declarative request: which KPI to move, in which direction (optionally
/// to a target value), and how important it is.
struct Intent {
  std::string id;
  std::string description;
  std::string kpi_name;
  Direction direction = Direction::maximize;
  std::optional<double> goal_value;
  double priority_weight = 1.0;
};

struct KpiSpec {
  Kpi kpi;
  Direction direction;
  std::optional<double> goal_value;
};

struct FunctionAssignment {
  SonFunction function;
  Ncp ncp;
};

enum class ConflictKind { none, direct_target };

struct ConflictCase {
  Ncp ncp = Ncp::tilt;
  std::vector<double> targets;  // per intent, in intent order
  ConflictKind kind = ConflictKind::none;
};

/// One row of the static KPI -> SON function -> control-parameter relation
/// table.
struct CatalogEntry {
  Kpi kpi;
  SonFunction function;
  Ncp ncp;
};

std::span<const CatalogEntry> catalog();

/// Extracts the KPI spec from a structured intent. Throws ValidationError on
/// a KPI outside the vocabulary.
KpiSpec identify(const Intent& intent);

/// Deterministic catalog lookup restricted to the scenario's tunable control
/// parameter. Throws ValidationError when no catalog row matches.
FunctionAssignment assign(const KpiSpec& spec, Ncp profile = Ncp::tilt);

/// The control-parameter value this intent would pick on its own:
/// maximize/minimize take the curve optimum (smallest parameter on ties);
/// reach-threshold takes the smallest parameter whose raw KPI meets the goal
/// and needs the raw series. Throws InfeasibleGoal when unreachable.
double estimate_target(const FunctionAssignment& assignment, const KpiSpec& spec,
                       const UtilityCurve& utility, Interval domain, double resolution = 0.01,
                       const SampledSeries* raw = nullptr);

/// Direct-target conflict iff the intents share the control parameter and
/// their targets differ by more than the resolution.
ConflictCase detect_conflict(std::span<const FunctionAssignment> assignments,
                             std::span<const double> targets, double resolution = 0.01);

/// Builds the bargaining problem (disagreement = curve minima, weights =
/// normalized priorities) and arbitrates. Throws ValidationError when the
/// case is not a direct-target conflict (apply the targets directly instead).
ArbitrationReport decide(const ConflictCase& conflict,
                         const std::vector<std::pair<std::string, UtilityCurve>>& curves,
                         const std::vector<double>& priorities,
                         const std::vector<Method>& methods, Interval domain,
                         double resolution = 0.01,
                         bargain::Exec exec = bargain::Exec::parallel);

}  // namespace icr::pipeline
