/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "icr/bargain.hpp"
#include "icr/pipeline.hpp"
#include "icr/ran.hpp"

namespace icr::io {

/// Shared-parameter curve table as exchanged on disk
/// (`parameter,utility_<id>,...`, 6 decimal places).
struct CurveTable {
  std::vector<double> parameters;
  std::vector<std::pair<std::string, std::vector<double>>> players;

  UtilityCurve curve(std::size_t player_index) const;
};

void write_curves_csv(const std::filesystem::path& path, const CurveTable& table);
CurveTable read_curves_csv(const std::filesystem::path& path);

void write_raw_kpi_csv(const std::filesystem::path& path, const ran::KpiCurves& curves);

nlohmann::json solution_to_json(const bargain::Solution& s);
nlohmann::json report_to_json(const bargain::ArbitrationReport& report,
                              const std::vector<std::string>& player_ids,
                              bargain::Interval domain, double resolution);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json(const std::filesystem::path& path);

/// Scenario config document. Keys: seed, placement_seed, tilt_grid{min,max,step},
/// environment{}, antenna{}, ue_height_m, sites[], sectors[], ue_groups[].
ran::RanScenario scenario_from_json(const nlohmann::json& j);
nlohmann::json default_scenario_config();

std::vector<pipeline::Intent> intents_from_json(const nlohmann::json& j);

std::string format_fixed(double v, int decimals);

}  // namespace icr::io
