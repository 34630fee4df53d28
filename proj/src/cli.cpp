/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "icr/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "icr/errors.hpp"
#include "icr/io.hpp"
#include "icr/pipeline.hpp"
#include "icr/ran.hpp"
#include "icr/scenario.hpp"

namespace icr::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<double> curve_values(const UtilityCurve& curve) {
  std::vector<double> v;
  v.reserve(curve.size());
  for (const auto& s : curve.samples()) v.push_back(s.utility);
  return v;
}

void print_report(const bargain::ArbitrationReport& report, bool quiet) {
  if (quiet) return;
  for (const auto& s : report.solutions) {
    std::cout << bargain::method_name(s.method) << "\tT = " << io::format_fixed(
                     std::round(s.parameter * 10.0) / 10.0, 1)
              << " deg\tJFI = " << io::format_fixed(s.jfi, 4);
    if (!s.note.empty()) std::cout << "\t(" << s.note << ")";
    std::cout << "\n";
  }
  std::cout << "chosen: " << bargain::method_name(report.chosen_method) << "  T_O = "
            << io::format_fixed(std::round(report.chosen_parameter * 10.0) / 10.0, 1) << " deg\n";
}

std::vector<double> normalized_weights(const std::vector<double>& raw, std::size_t n) {
  if (raw.size() != n) {
    throw ValidationError("expected " + std::to_string(n) + " weights, got " +
                          std::to_string(raw.size()));
  }
  double sum = 0.0;
  for (const double w : raw) {
    if (!(w >= 0.0)) throw ValidationError("weights must be >= 0");
    sum += w;
  }
  if (!(sum > 0.0)) throw ValidationError("at least one weight must be positive");
  std::vector<double> out;
  out.reserve(n);
  for (const double w : raw) out.push_back(w / sum);
  return out;
}

json load_scenario_config(const RunConfig& cfg) {
  json j = cfg.config_path.empty() ? io::default_scenario_config()
                                   : io::read_json(cfg.config_path);
  if (cfg.seed) j["seed"] = *cfg.seed;
  return j;
}

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string(name) + ": " + e.what());
  }
}

}  // namespace

void run_scenario(const RunConfig& cfg) {
  const json config = load_scenario_config(cfg);
  const ran::RanScenario scenario = io::scenario_from_json(config);
  const ran::KpiCurves kpi = ran::build_kpi_curves(scenario);

  const UtilityCurve cqi_utility = ran::normalize_to_utility(kpi.tilt_grid, kpi.mean_cqi);
  const UtilityCurve sinr_utility = ran::normalize_to_utility(kpi.tilt_grid, kpi.mean_sinr_db);

  const fs::path out(cfg.out_dir);
  io::write_raw_kpi_csv(out / "raw_kpi.csv", kpi);
  io::write_curves_csv(out / "utilities.csv",
                       {kpi.tilt_grid,
                        {{"a", curve_values(cqi_utility)}, {"b", curve_values(sinr_utility)}}});
  io::write_json(out / "scenario_config.json", config);

  if (!cfg.quiet) {
    std::cout << "wrote " << (out / "raw_kpi.csv").string() << ", "
              << (out / "utilities.csv").string() << " (" << kpi.tilt_grid.size()
              << " tilt rows)\n";
  }
}

namespace {

bargain::BargainingProblem problem_from_table(const io::CurveTable& table, const RunConfig& cfg,
                                              std::vector<std::string>& ids_out) {
  if (table.players.size() < 2) {
    throw ValidationError("bargaining needs at least 2 utility columns");
  }
  const bargain::Interval domain{table.parameters.front(), table.parameters.back()};
  std::vector<double> weights;
  if (cfg.weights) {
    weights = normalized_weights(*cfg.weights, table.players.size());
  } else {
    weights.assign(table.players.size(), 1.0 / static_cast<double>(table.players.size()));
  }
  std::vector<bargain::Player> players;
  for (std::size_t i = 0; i < table.players.size(); ++i) {
    ids_out.push_back(table.players[i].first);
    UtilityCurve curve = table.curve(i);
    const double d = curve.min_on(domain.lo, domain.hi);
    players.push_back({table.players[i].first, std::move(curve), d, weights[i]});
  }
  return bargain::BargainingProblem(std::move(players), domain, cfg.resolution);
}

}  // namespace

void run_solve(const RunConfig& cfg) {
  if (cfg.curves_path.empty()) throw ValidationError("solve needs --curves <csv>");
  if (cfg.methods.empty()) throw ValidationError("solve needs a nonempty --methods list");
  const io::CurveTable table = io::read_curves_csv(cfg.curves_path);
  std::vector<std::string> ids;
  const bargain::BargainingProblem problem = problem_from_table(table, cfg, ids);
  const bargain::ArbitrationReport report = bargain::arbitrate(problem, cfg.methods);

  const fs::path out(cfg.out_dir);
  io::write_json(out / "report.json",
                 io::report_to_json(report, ids, problem.domain(), cfg.resolution));
  print_report(report, cfg.quiet);
}

void run_arbitrate(const RunConfig& cfg) {
  if (cfg.intents_path.empty()) throw ValidationError("arbitrate needs --intents <json>");
  if (cfg.methods.empty()) throw ValidationError("arbitrate needs a nonempty --methods list");

  const auto intents = stage("intents", [&] {
    auto parsed = io::intents_from_json(io::read_json(cfg.intents_path));
    if (parsed.size() < 2) throw ValidationError("need at least 2 intents");
    return parsed;
  });

  // Utility (and, in scenario mode, raw KPI) curves per intent.
  std::vector<std::pair<std::string, UtilityCurve>> curves;
  std::vector<SampledSeries> raw_series(intents.size());
  std::vector<bool> has_raw(intents.size(), false);
  bargain::Interval domain{0.0, 15.0};
  json scenario_config;

  const auto specs = stage("identifier", [&] {
    std::vector<pipeline::KpiSpec> out;
    out.reserve(intents.size());
    for (const auto& intent : intents) out.push_back(pipeline::identify(intent));
    return out;
  });

  if (!cfg.curves_path.empty()) {
    const io::CurveTable table = io::read_curves_csv(cfg.curves_path);
    domain = {table.parameters.front(), table.parameters.back()};
    for (const auto& intent : intents) {
      bool found = false;
      for (std::size_t c = 0; c < table.players.size(); ++c) {
        if (table.players[c].first == intent.id) {
          curves.emplace_back(intent.id, table.curve(c));
          found = true;
          break;
        }
      }
      if (!found) {
        throw ValidationError("curve file has no utility_" + intent.id + " column");
      }
    }
  } else {
    scenario_config = load_scenario_config(cfg);
    const ran::RanScenario scenario = io::scenario_from_json(scenario_config);
    const ran::KpiCurves kpi = ran::build_kpi_curves(scenario);
    domain = {kpi.tilt_grid.front(), kpi.tilt_grid.back()};
    for (std::size_t i = 0; i < intents.size(); ++i) {
      const std::vector<double>* values = nullptr;
      switch (specs[i].kpi) {
        case pipeline::Kpi::cqi:
          values = &kpi.mean_cqi;
          break;
        case pipeline::Kpi::sinr:
          values = &kpi.mean_sinr_db;
          break;
        case pipeline::Kpi::load:
          throw ValidationError("the scenario produces no load KPI series for intent '" +
                                intents[i].id + "'");
      }
      curves.emplace_back(intents[i].id, ran::normalize_to_utility(kpi.tilt_grid, *values));
      raw_series[i] = {kpi.tilt_grid, *values};
      has_raw[i] = true;
    }
  }

  const auto assignments = stage("assignment", [&] {
    std::vector<pipeline::FunctionAssignment> out;
    out.reserve(specs.size());
    for (const auto& spec : specs) out.push_back(pipeline::assign(spec));
    return out;
  });

  const auto targets = stage("estimator", [&] {
    std::vector<double> out;
    out.reserve(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i) {
      out.push_back(pipeline::estimate_target(assignments[i], specs[i], curves[i].second, domain,
                                              cfg.resolution,
                                              has_raw[i] ? &raw_series[i] : nullptr));
    }
    return out;
  });

  const auto conflict = stage("conflict-detection", [&] {
    return pipeline::detect_conflict(assignments, targets, cfg.resolution);
  });

  std::vector<double> priorities;
  priorities.reserve(intents.size());
  for (const auto& intent : intents) priorities.push_back(intent.priority_weight);

  const auto report = stage("decision", [&] {
    return pipeline::decide(conflict, curves, priorities, cfg.methods, domain, cfg.resolution);
  });

  std::vector<std::string> ids;
  ids.reserve(intents.size());
  for (const auto& intent : intents) ids.push_back(intent.id);

  json j = io::report_to_json(report, ids, domain, cfg.resolution);
  json stages;
  stages["intents"] = json::array();
  stages["kpi_specs"] = json::array();
  stages["assignments"] = json::array();
  stages["targets"] = json::array();
  for (std::size_t i = 0; i < intents.size(); ++i) {
    json intent_j{{"id", intents[i].id},
                  {"kpi", intents[i].kpi_name},
                  {"direction", pipeline::direction_name(intents[i].direction)},
                  {"priority", intents[i].priority_weight}};
    if (intents[i].goal_value) intent_j["goal_value"] = *intents[i].goal_value;
    stages["intents"].push_back(intent_j);
    json spec_j{{"intent", intents[i].id},
                {"kpi", pipeline::kpi_name(specs[i].kpi)},
                {"direction", pipeline::direction_name(specs[i].direction)}};
    if (specs[i].goal_value) spec_j["goal_value"] = *specs[i].goal_value;
    stages["kpi_specs"].push_back(spec_j);
    stages["assignments"].push_back({{"intent", intents[i].id},
                                     {"function", pipeline::function_name(assignments[i].function)},
                                     {"ncp", pipeline::ncp_name(assignments[i].ncp)}});
    stages["targets"].push_back({{"intent", intents[i].id}, {"parameter", targets[i]}});
  }
  stages["conflict"] = {
      {"kind", conflict.kind == pipeline::ConflictKind::direct_target ? "direct-target" : "none"},
      {"ncp", pipeline::ncp_name(conflict.ncp)},
      {"targets", conflict.targets}};
  j["pipeline"] = stages;

  const fs::path out(cfg.out_dir);
  io::write_json(out / "report.json", j);
  if (!scenario_config.is_null()) io::write_json(out / "scenario_config.json", scenario_config);
  print_report(report, cfg.quiet);
}

void run_plot_data(const RunConfig& cfg) {
  if (cfg.curves_path.empty()) throw ValidationError("plot-data needs --curves <csv>");
  const fs::path out(cfg.out_dir);
  const fs::path report_path = out / "report.json";
  if (!fs::exists(report_path)) {
    throw ValidationError("missing " + report_path.string() + "; run solve or arbitrate first");
  }
  const json report = io::read_json(report_path);
  const io::CurveTable table = io::read_curves_csv(cfg.curves_path);

  std::vector<UtilityCurve> curves;
  curves.reserve(table.players.size());
  for (std::size_t c = 0; c < table.players.size(); ++c) curves.push_back(table.curve(c));

  const bargain::Interval domain{table.parameters.front(), table.parameters.back()};
  const auto dense = grid::refined_grid(domain, cfg.resolution);

  io::CurveTable dense_table;
  dense_table.parameters = dense;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    dense_table.players.emplace_back(
        table.players[c].first,
        grid::map_values(dense.size(), [&](std::size_t i) { return curves[c].eval(dense[i]); }));
  }
  io::write_curves_csv(out / "curves_dense.csv", dense_table);

  std::ofstream markers(out / "markers.csv");
  if (!markers) throw ValidationError("cannot open markers.csv for writing");
  markers << "method,parameter";
  for (const auto& [id, values] : table.players) markers << ",utility_" << id;
  markers << "\n";
  for (const auto& sol : report.at("solutions")) {
    const double t = sol.at("parameter").get<double>();
    markers << sol.at("method").get<std::string>() << ',' << io::format_fixed(t, 12);
    for (const auto& curve : curves) markers << ',' << io::format_fixed(curve.eval(t), 12);
    markers << "\n";
  }

  if (!cfg.quiet) {
    std::cout << "wrote " << (out / "curves_dense.csv").string() << " (" << dense.size()
              << " rows) and " << (out / "markers.csv").string() << "\n";
  }
}

}  // namespace icr::cli
