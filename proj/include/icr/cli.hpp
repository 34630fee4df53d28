/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icr/bargain.hpp"

namespace icr::cli {

/// Options shared by the subcommands; unset paths fall back to defaults
/// (built-in scenario config) or are rejected where required.
struct RunConfig {
  std::string config_path;
  std::string curves_path;
  std::string intents_path;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;  // overrides the config seed
  double resolution = 0.01;
  std::vector<bargain::Method> methods = {bargain::Method::nbs, bargain::Method::wnbs,
                                          bargain::Method::ksbs, bargain::Method::sebs};
  std::optional<std::vector<double>> weights;  // solve only; normalized to sum 1
  bool quiet = false;
};

/// Synthesizes KPI curves for the scenario and writes raw_kpi.csv,
/// utilities.csv and the resolved scenario_config.json.
void run_scenario(const RunConfig& cfg);

/// Solves the requested methods over a utility-curve CSV and writes
/// report.json.
void run_solve(const RunConfig& cfg);

/// Full workflow: intents -> KPI specs -> function assignment -> target
/// estimation -> conflict detection -> arbitration; writes report.json with
/// the per-stage artifacts attached.
void run_arbitrate(const RunConfig& cfg);

/// Writes curves_dense.csv (interpolated utilities at the configured
/// resolution) and markers.csv (per-method optimum with its utilities) from
/// a curve CSV plus the report.json in the output directory.
void run_plot_data(const RunConfig& cfg);

}  // namespace icr::cli
