/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "icr/cli.hpp"
#include "icr/errors.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<icr::bargain::Method> parse_methods(const std::string& csv) {
  std::vector<icr::bargain::Method> methods;
  for (const auto& name : split_csv(csv)) {
    const auto m = icr::bargain::parse_method(name);
    if (!m) throw icr::ValidationError("unknown method '" + name + "'");
    methods.push_back(*m);
  }
  if (methods.empty()) throw icr::ValidationError("--methods must name at least one method");
  return methods;
}

std::vector<double> parse_weights(const std::string& csv) {
  std::vector<double> weights;
  for (const auto& item : split_csv(csv)) weights.push_back(std::stod(item));
  return weights;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conflict resolution for intent-driven networks: bargaining solutions over "
               "utility curves of one shared control parameter"};
  app.require_subcommand(1);

  icr::cli::RunConfig cfg;
  std::string methods_csv = "nbs,wnbs,ksbs,sebs";
  std::string weights_csv;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
    sub->add_flag("--quiet", cfg.quiet, "suppress the summary printed to stdout");
  };

  CLI::App* scenario = app.add_subcommand(
      "scenario", "synthesize KPI curves and normalized utilities for a RAN scenario");
  scenario->add_option("--config", cfg.config_path, "scenario config JSON (default: built-in)");
  scenario->add_option("--seed", cfg.seed, "override the config seed");
  add_common(scenario);

  CLI::App* solve =
      app.add_subcommand("solve", "run bargaining solutions over a utility-curve CSV");
  solve->add_option("--curves", cfg.curves_path, "utility curve CSV")->required();
  solve->add_option("--methods", methods_csv, "comma-separated subset of nbs,wnbs,ksbs,sebs")
      ->capture_default_str();
  solve->add_option("--weights", weights_csv, "comma-separated player weights (normalized)");
  solve->add_option("--resolution", cfg.resolution, "search resolution in degrees")
      ->capture_default_str();
  add_common(solve);

  CLI::App* arbitrate = app.add_subcommand(
      "arbitrate", "full workflow from an intents file to the arbitrated control parameter");
  arbitrate->add_option("--intents", cfg.intents_path, "intents JSON")->required();
  arbitrate->add_option("--config", cfg.config_path, "scenario config JSON (default: built-in)");
  arbitrate->add_option("--curves", cfg.curves_path,
                        "precomputed utility CSV (bypasses the scenario model)");
  arbitrate->add_option("--methods", methods_csv, "comma-separated subset of nbs,wnbs,ksbs,sebs")
      ->capture_default_str();
  arbitrate->add_option("--resolution", cfg.resolution, "search resolution in degrees")
      ->capture_default_str();
  arbitrate->add_option("--seed", cfg.seed, "override the config seed");
  add_common(arbitrate);

  CLI::App* plot = app.add_subcommand(
      "plot-data", "emit dense curves and per-method markers for external plotting");
  plot->add_option("--curves", cfg.curves_path, "utility curve CSV")->required();
  plot->add_option("--resolution", cfg.resolution, "interpolation resolution in degrees")
      ->capture_default_str();
  add_common(plot);

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.methods = parse_methods(methods_csv);
    if (!weights_csv.empty()) cfg.weights = parse_weights(weights_csv);

    if (scenario->parsed()) icr::cli::run_scenario(cfg);
    if (solve->parsed()) icr::cli::run_solve(cfg);
    if (arbitrate->parsed()) icr::cli::run_arbitrate(cfg);
    if (plot->parsed()) icr::cli::run_plot_data(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
