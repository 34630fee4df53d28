/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "icr/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "icr/errors.hpp"
#include "icr/scenario.hpp"

namespace icr::io {

using nlohmann::json;

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

UtilityCurve CurveTable::curve(std::size_t player_index) const {
  const auto& values = players.at(player_index).second;
  std::vector<CurveSample> samples;
  samples.reserve(parameters.size());
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    samples.push_back({parameters[i], values[i]});
  }
  return UtilityCurve(std::move(samples));
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open '" + path.string() + "' for writing");
  return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& s, const std::string& where) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ValidationError("malformed number '" + s + "' in " + where);
  }
}

}  // namespace

void write_curves_csv(const std::filesystem::path& path, const CurveTable& table) {
  auto out = open_out(path);
  out << "parameter";
  for (const auto& [id, values] : table.players) {
    if (values.size() != table.parameters.size()) {
      throw ValidationError("curve column '" + id + "' length mismatch");
    }
    out << ",utility_" << id;
  }
  out << "\n";
  for (std::size_t i = 0; i < table.parameters.size(); ++i) {
    out << format_fixed(table.parameters[i], 6);
    for (const auto& [id, values] : table.players) out << ',' << format_fixed(values[i], 6);
    out << "\n";
  }
}

CurveTable read_curves_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open curve file '" + path.string() + "'");
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("empty curve file");
  const auto header = split(line, ',');
  if (header.empty() || header.front() != "parameter") {
    throw ValidationError("curve file must start with a 'parameter' column");
  }
  CurveTable table;
  for (std::size_t c = 1; c < header.size(); ++c) {
    const std::string& col = header[c];
    if (col.rfind("utility_", 0) != 0 || col.size() <= 8) {
      throw ValidationError("curve column '" + col + "' must be named utility_<player>");
    }
    table.players.emplace_back(col.substr(8), std::vector<double>{});
  }
  if (table.players.empty()) throw ValidationError("curve file has no utility columns");

  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != header.size()) {
      throw ValidationError("row " + std::to_string(row) + " has " +
                            std::to_string(cells.size()) + " cells, expected " +
                            std::to_string(header.size()));
    }
    const std::string where = "row " + std::to_string(row);
    table.parameters.push_back(parse_double(cells[0], where));
    for (std::size_t c = 1; c < cells.size(); ++c) {
      table.players[c - 1].second.push_back(parse_double(cells[c], where));
    }
  }
  if (table.parameters.size() < 2) throw ValidationError("curve file needs at least 2 rows");
  return table;
}

void write_raw_kpi_csv(const std::filesystem::path& path, const ran::KpiCurves& curves) {
  auto out = open_out(path);
  out << "tilt_deg,mean_sinr_db,mean_cqi\n";
  for (std::size_t i = 0; i < curves.tilt_grid.size(); ++i) {
    out << format_fixed(curves.tilt_grid[i], 6) << ',' << format_fixed(curves.mean_sinr_db[i], 6)
        << ',' << format_fixed(curves.mean_cqi[i], 6) << "\n";
  }
}

json solution_to_json(const bargain::Solution& s) {
  json j;
  j["method"] = bargain::method_name(s.method);
  j["parameter"] = s.parameter;
  j["parameter_rounded"] = std::round(s.parameter * 10.0) / 10.0;
  j["utilities"] = s.utilities;
  j["gains"] = s.gains;
  j["objective"] = s.objective;
  j["jfi"] = s.jfi;
  j["exact"] = s.exact;
  if (s.residual) j["residual"] = *s.residual;
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

json report_to_json(const bargain::ArbitrationReport& report,
                    const std::vector<std::string>& player_ids, bargain::Interval domain,
                    double resolution) {
  json j;
  j["players"] = player_ids;
  j["domain"] = {{"min", domain.lo}, {"max", domain.hi}};
  j["resolution"] = resolution;
  j["solutions"] = json::array();
  for (const auto& s : report.solutions) j["solutions"].push_back(solution_to_json(s));
  j["chosen_method"] = bargain::method_name(report.chosen_method);
  j["chosen_parameter"] = report.chosen_parameter;
  j["chosen_parameter_rounded"] = std::round(report.chosen_parameter * 10.0) / 10.0;
  return j;
}

void write_json(const std::filesystem::path& path, const json& j) {
  auto out = open_out(path);
  out << j.dump(2) << "\n";
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError("malformed JSON in '" + path.string() + "': " + e.what());
  }
  return j;
}

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) {
    throw ValidationError(std::string("missing ") + key + " in " + where);
  }
  return j.at(key);
}

ran::Vec2 parse_vec2(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2) {
    throw ValidationError(std::string("expected [x, y] for ") + where);
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

ran::RanScenario scenario_from_json(const json& j) {
  ran::RanScenario sc;

  sc.env.rng_seed = j.value("seed", sc.env.rng_seed);
  const auto placement_seed = j.value("placement_seed", ran::kDefaultPlacementSeed);
  sc.ue_height_m = j.value("ue_height_m", sc.ue_height_m);

  if (j.contains("tilt_grid")) {
    const auto& g = j.at("tilt_grid");
    sc.tilt_grid.min_deg = require(g, "min", "tilt_grid").get<double>();
    sc.tilt_grid.max_deg = require(g, "max", "tilt_grid").get<double>();
    sc.tilt_grid.step_deg = require(g, "step", "tilt_grid").get<double>();
  }

  if (j.contains("environment")) {
    const auto& e = j.at("environment");
    auto& env = sc.env;
    env.pathloss_intercept_db = e.value("pathloss_intercept_db", env.pathloss_intercept_db);
    env.pathloss_slope_db_per_decade =
        e.value("pathloss_slope_db_per_decade", env.pathloss_slope_db_per_decade);
    env.shadowing_std_db = e.value("shadowing_std_db", env.shadowing_std_db);
    env.noise_figure_db = e.value("noise_figure_db", env.noise_figure_db);
    env.bandwidth_hz = e.value("bandwidth_hz", env.bandwidth_hz);
    env.thermal_noise_density_dbm_hz =
        e.value("thermal_noise_density_dbm_hz", env.thermal_noise_density_dbm_hz);
    if (e.contains("cqi_thresholds_db")) {
      const auto& t = e.at("cqi_thresholds_db");
      if (!t.is_array() || t.size() != env.cqi_thresholds_db.size()) {
        throw ValidationError("cqi_thresholds_db must hold 16 values");
      }
      for (std::size_t i = 0; i < env.cqi_thresholds_db.size(); ++i) {
        env.cqi_thresholds_db[i] = t[i].get<double>();
      }
    }
  }

  if (j.contains("antenna")) {
    const auto& a = j.at("antenna");
    auto& ant = sc.antenna;
    ant.boresight_gain_dbi = a.value("boresight_gain_dbi", ant.boresight_gain_dbi);
    ant.vertical_hpbw_deg = a.value("vertical_hpbw_deg", ant.vertical_hpbw_deg);
    ant.horizontal_hpbw_deg = a.value("horizontal_hpbw_deg", ant.horizontal_hpbw_deg);
    ant.vertical_sla_db = a.value("vertical_sla_db", ant.vertical_sla_db);
    ant.horizontal_sla_db = a.value("horizontal_sla_db", ant.horizontal_sla_db);
    ant.overall_floor_db = a.value("overall_floor_db", ant.overall_floor_db);
    sc.boresight_ref_depression_deg =
        a.value("boresight_ref_depression_deg", sc.boresight_ref_depression_deg);
  }

  const auto& sites = require(j, "sites", "scenario config");
  if (!sites.is_array() || sites.empty()) throw ValidationError("sites must be a nonempty array");
  struct Site {
    ran::Vec2 position;
    bool active;
    double height;
    double power;
  };
  std::vector<Site> parsed_sites;
  for (const auto& s : sites) {
    parsed_sites.push_back({parse_vec2(require(s, "position_m", "site"), "site position"),
                            s.value("active", true), s.value("antenna_height_m", 30.0),
                            s.value("tx_power_dbm", 46.0)});
  }

  if (j.contains("sectors")) {
    for (const auto& s : j.at("sectors")) {
      const auto site_idx = require(s, "site", "sector").get<std::size_t>();
      if (site_idx >= parsed_sites.size()) throw ValidationError("sector references unknown site");
      const Site& site = parsed_sites[site_idx];
      ran::Sector sec;
      sec.site_position = site.position;
      sec.azimuth_deg = require(s, "azimuth_deg", "sector").get<double>();
      sec.antenna_height_m = site.height;
      sec.tx_power_dbm = site.power;
      sec.active = site.active;
      sc.sectors.push_back(sec);
    }
  } else {
    // Default deployment: three sectors per site.
    for (const Site& site : parsed_sites) {
      for (const double az : {0.0, 120.0, 240.0}) {
        ran::Sector sec;
        sec.site_position = site.position;
        sec.azimuth_deg = az;
        sec.antenna_height_m = site.height;
        sec.tx_power_dbm = site.power;
        sec.active = site.active;
        sc.sectors.push_back(sec);
      }
    }
  }

  const auto& groups = require(j, "ue_groups", "scenario config");
  if (!groups.is_array() || groups.empty()) {
    throw ValidationError("ue_groups must be a nonempty array");
  }
  std::uint64_t stream = 0;
  for (const auto& g : groups) {
    ++stream;
    const std::string service = require(g, "service", "ue_group").get<std::string>();
    ran::UeGroup group;
    if (service == "call_text") {
      group.service = ran::Service::call_text;
    } else if (service == "video") {
      group.service = ran::Service::video;
    } else {
      throw ValidationError("unknown UE service '" + service + "'");
    }
    if (g.contains("positions_m")) {
      for (const auto& p : g.at("positions_m")) {
        group.positions.push_back(parse_vec2(p, "UE position"));
      }
    } else {
      const auto count = require(g, "count", "ue_group").get<std::size_t>();
      const auto& pl = require(g, "placement", "ue_group");
      const std::string kind = require(pl, "kind", "placement").get<std::string>();
      const ran::Vec2 center = parse_vec2(require(pl, "center_m", "placement"), "placement center");
      if (kind == "ring") {
        group.positions = ran::ring_positions(
            count,
            {center, require(pl, "inner_radius_m", "ring").get<double>(),
             require(pl, "outer_radius_m", "ring").get<double>()},
            placement_seed, stream);
      } else if (kind == "disc") {
        group.positions = ran::disc_positions(
            count, {center, require(pl, "radius_m", "disc").get<double>()}, placement_seed,
            stream);
      } else {
        throw ValidationError("unknown placement kind '" + kind + "'");
      }
    }
    if (g.contains("count") && g.at("count").get<std::size_t>() != group.positions.size()) {
      throw ValidationError("ue_group count does not match its positions");
    }
    sc.ue_groups.push_back(std::move(group));
  }

  sc.validate();
  return sc;
}

json default_scenario_config() {
  json j;
  j["seed"] = 42;
  j["placement_seed"] = ran::kDefaultPlacementSeed;
  j["ue_height_m"] = 1.5;
  j["tilt_grid"] = {{"min", 0.0}, {"max", 15.0}, {"step", 1.0}};
  j["environment"] = {{"pathloss_intercept_db", 128.1},
                      {"pathloss_slope_db_per_decade", 37.6},
                      {"shadowing_std_db", 8.0},
                      {"noise_figure_db", 9.0},
                      {"bandwidth_hz", 5e6},
                      {"thermal_noise_density_dbm_hz", -174.0},
                      {"cqi_thresholds_db", ran::kDefaultCqiThresholdsDb}};
  j["antenna"] = {{"boresight_gain_dbi", 10.0},   {"vertical_hpbw_deg", 10.0},
                  {"horizontal_hpbw_deg", 70.0},  {"vertical_sla_db", 18.0},
                  {"horizontal_sla_db", 20.0},    {"overall_floor_db", 30.0},
                  {"boresight_ref_depression_deg", 20.0}};
  j["sites"] = json::array({
      {{"position_m", {0.0, 0.0}}, {"active", true}, {"antenna_height_m", 30.0},
       {"tx_power_dbm", 46.0}},
      {{"position_m", {1299.0, 750.0}}, {"active", false}, {"antenna_height_m", 30.0},
       {"tx_power_dbm", 46.0}},
      {{"position_m", {-1299.0, 750.0}}, {"active", false}, {"antenna_height_m", 30.0},
       {"tx_power_dbm", 46.0}},
  });
  j["sectors"] = json::array();
  for (std::size_t site = 0; site < 3; ++site) {
    for (const double az : {0.0, 120.0, 240.0}) {
      j["sectors"].push_back({{"site", site}, {"azimuth_deg", az}});
    }
  }
  j["ue_groups"] = json::array({
      {{"service", "call_text"},
       {"count", 80},
       {"placement",
        {{"kind", "ring"}, {"center_m", {0.0, 0.0}}, {"inner_radius_m", 500.0},
         {"outer_radius_m", 650.0}}}},
      {{"service", "video"},
       {"count", 20},
       {"placement", {{"kind", "disc"}, {"center_m", {80.0, 15.0}}, {"radius_m", 25.0}}}},
  });
  return j;
}

std::vector<pipeline::Intent> intents_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("intents file must hold a nonempty array");
  std::vector<pipeline::Intent> intents;
  for (const auto& it : j) {
    pipeline::Intent intent;
    intent.id = require(it, "id", "intent").get<std::string>();
    intent.description = it.value("description", "");
    intent.kpi_name = require(it, "kpi", "intent '" + intent.id + "'").get<std::string>();
    const auto& goal = require(it, "goal", "intent '" + intent.id + "'");
    const auto dir =
        pipeline::parse_direction(require(goal, "direction", "goal").get<std::string>());
    if (!dir) throw ValidationError("intent '" + intent.id + "': unknown goal direction");
    intent.direction = *dir;
    if (goal.contains("value")) intent.goal_value = goal.at("value").get<double>();
    intent.priority_weight = it.value("priority", 1.0);
    intents.push_back(std::move(intent));
  }
  return intents;
}

}  // namespace icr::io
