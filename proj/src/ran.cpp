/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "icr/ran.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "icr/errors.hpp"

namespace icr::ran {

namespace {

constexpr double kPi = 3.14159265358979323846;

double wrap180(double deg) {
  double w = std::fmod(deg + 180.0, 360.0);
  if (w < 0.0) w += 360.0;
  return w - 180.0;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// splitmix64; mixes (seed, link_id) into an independent stream seed.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<double> TiltGrid::values() const {
  if (!(step_deg > 0.0) || !(min_deg <= max_deg)) throw ValidationError("invalid tilt grid");
  return grid::refined_grid({min_deg, max_deg}, step_deg);
}

std::size_t RanScenario::total_ues() const {
  std::size_t n = 0;
  for (const auto& g : ue_groups) n += g.positions.size();
  return n;
}

void RanScenario::validate() const {
  if (sectors.empty()) throw ValidationError("scenario has no sectors");
  bool any_active = false;
  for (const auto& s : sectors) {
    any_active = any_active || s.active;
    if (s.tilt_deg < 0.0 || s.tilt_deg > 15.0) {
      throw ValidationError("sector tilt must lie in [0, 15] degrees");
    }
  }
  if (!any_active) throw ValidationError("scenario has no active sector");
  if (ue_groups.empty()) throw ValidationError("scenario has no ue_groups");
  for (const auto& g : ue_groups) {
    if (g.positions.empty()) throw ValidationError("empty UE group");
  }
  if (tilt_grid.min_deg < 0.0 || tilt_grid.max_deg > 15.0) {
    throw ValidationError("tilt grid must lie within [0, 15] degrees");
  }
  if (env.shadowing_std_db < 0.0) throw ValidationError("shadowing std must be >= 0");
  if (!(env.bandwidth_hz > 0.0)) throw ValidationError("bandwidth must be positive");
  if (!std::is_sorted(env.cqi_thresholds_db.begin(), env.cqi_thresholds_db.end())) {
    throw ValidationError("CQI thresholds must be nondecreasing");
  }
}

double antenna_gain_dbi(const AntennaPattern& pattern, double vertical_deg, double horizontal_deg,
                        double tilt_deg) {
  if (vertical_deg < -90.0 || vertical_deg > 90.0) {
    throw DomainError("vertical angle " + std::to_string(vertical_deg) + " outside [-90, 90]");
  }
  if (horizontal_deg < -180.0 || horizontal_deg > 180.0) {
    throw DomainError("horizontal angle " + std::to_string(horizontal_deg) +
                      " outside [-180, 180]");
  }
  const double v = (vertical_deg - tilt_deg) / pattern.vertical_hpbw_deg;
  const double h = horizontal_deg / pattern.horizontal_hpbw_deg;
  const double att_v = std::min(12.0 * v * v, pattern.vertical_sla_db);
  const double att_h = std::min(12.0 * h * h, pattern.horizontal_sla_db);
  const double att = std::min(att_v + att_h, pattern.overall_floor_db);
  return pattern.boresight_gain_dbi - att;
}

double path_loss_db(const RadioEnvironment& env, double distance_m) {
  if (!(distance_m > 0.0)) throw DomainError("path loss needs a positive distance");
  return env.pathloss_intercept_db + env.pathloss_slope_db_per_decade * std::log10(distance_m / 1000.0);
}

double shadowing_db(const RadioEnvironment& env, std::uint64_t link_id) {
  if (env.shadowing_std_db == 0.0) return 0.0;
  std::mt19937_64 rng(mix64(env.rng_seed ^ mix64(link_id)));
  std::normal_distribution<double> dist(0.0, env.shadowing_std_db);
  return dist(rng);
}

double noise_floor_dbm(const RadioEnvironment& env) {
  return env.thermal_noise_density_dbm_hz + linear_to_db(env.bandwidth_hz) + env.noise_figure_db;
}

namespace {

struct LinkGeometry {
  double distance_m;        // 3-D antenna-to-UE distance
  double vertical_deg;      // height of the UE above the reference boresight
  double horizontal_deg;    // bearing offset from the sector azimuth
};

LinkGeometry link_geometry(const RanScenario& scenario, const Sector& sector, Vec2 ue) {
  const double dx = ue.x - sector.site_position.x;
  const double dy = ue.y - sector.site_position.y;
  const double ground = std::hypot(dx, dy);
  const double dz = sector.antenna_height_m - scenario.ue_height_m;
  const double bearing = std::atan2(dy, dx) / kPi * 180.0;
  // Depression angle of the UE below the antenna; the commanded tilt raises
  // the beam from the reference depression, so a UE maps to the vertical
  // coordinate (reference - depression).
  const double depression = std::atan2(dz, ground) / kPi * 180.0;
  return {std::hypot(ground, dz), scenario.boresight_ref_depression_deg - depression,
          wrap180(bearing - sector.azimuth_deg)};
}

}  // namespace

double rx_power_dbm(const RanScenario& scenario, std::size_t sector_index, Vec2 ue_position,
                    std::size_t ue_index, double tilt_deg) {
  if (sector_index >= scenario.sectors.size()) throw ValidationError("sector index out of range");
  const Sector& sector = scenario.sectors[sector_index];
  if (!sector.active) {
    throw ValidationError("inactive sector contributes neither signal nor interference");
  }
  const LinkGeometry geo = link_geometry(scenario, sector, ue_position);
  const double gain = antenna_gain_dbi(scenario.antenna, geo.vertical_deg, geo.horizontal_deg,
                                       tilt_deg);
  const std::uint64_t link_id =
      static_cast<std::uint64_t>(sector_index) * scenario.total_ues() + ue_index;
  return sector.tx_power_dbm + gain - path_loss_db(scenario.env, geo.distance_m) -
         shadowing_db(scenario.env, link_id);
}

double compute_sinr_db(const RanScenario& scenario, Vec2 ue_position, std::size_t ue_index,
                       double tilt_deg) {
  double serving_dbm = 0.0;
  std::size_t serving = grid::npos;
  std::vector<double> rx(scenario.sectors.size(), 0.0);
  for (std::size_t s = 0; s < scenario.sectors.size(); ++s) {
    if (!scenario.sectors[s].active) continue;
    rx[s] = rx_power_dbm(scenario, s, ue_position, ue_index, tilt_deg);
    if (serving == grid::npos || rx[s] > serving_dbm) {
      serving = s;
      serving_dbm = rx[s];
    }
  }
  if (serving == grid::npos) throw ValidationError("no active sector in scenario");

  double interference_mw = 0.0;
  for (std::size_t s = 0; s < scenario.sectors.size(); ++s) {
    if (s == serving || !scenario.sectors[s].active) continue;
    interference_mw += db_to_linear(rx[s]);
  }
  const double noise_mw = db_to_linear(noise_floor_dbm(scenario.env));
  return serving_dbm - linear_to_db(interference_mw + noise_mw);
}

int sinr_to_cqi(double sinr_db, std::span<const double> thresholds_db) {
  int cqi = 0;
  for (std::size_t k = 0; k < thresholds_db.size(); ++k) {
    if (sinr_db >= thresholds_db[k]) cqi = static_cast<int>(k);
  }
  return std::min(cqi, 15);
}

int sinr_to_cqi(double sinr_db, const RadioEnvironment& env) {
  return sinr_to_cqi(sinr_db, std::span<const double>(env.cqi_thresholds_db));
}

KpiCurves build_kpi_curves(const RanScenario& scenario, Exec exec) {
  scenario.validate();
  const std::vector<double> tilts = scenario.tilt_grid.values();

  // Flattened UE list; indices are stable so shadowing draws do not depend on
  // the evaluation order.
  struct Ue {
    Vec2 position;
    Service service;
  };
  std::vector<Ue> ues;
  ues.reserve(scenario.total_ues());
  std::size_t n_video = 0, n_call = 0;
  for (const auto& g : scenario.ue_groups) {
    for (const auto& pos : g.positions) ues.push_back({pos, g.service});
    (g.service == Service::video ? n_video : n_call) += g.positions.size();
  }
  if (n_video == 0 || n_call == 0) {
    throw ValidationError("scenario needs both a video and a call-text UE group");
  }

  KpiCurves out;
  out.tilt_grid = tilts;
  // Parallel across tilts; the per-tilt UE accumulation stays in index order,
  // so both execution policies produce identical sums.
  out.mean_sinr_db = grid::map_values(
      tilts.size(),
      [&](std::size_t ti) {
        double acc = 0.0;
        for (std::size_t u = 0; u < ues.size(); ++u) {
          if (ues[u].service != Service::video) continue;
          acc += compute_sinr_db(scenario, ues[u].position, u, tilts[ti]);
        }
        return acc / static_cast<double>(n_video);
      },
      exec);
  out.mean_cqi = grid::map_values(
      tilts.size(),
      [&](std::size_t ti) {
        double acc = 0.0;
        for (std::size_t u = 0; u < ues.size(); ++u) {
          if (ues[u].service != Service::call_text) continue;
          acc += sinr_to_cqi(compute_sinr_db(scenario, ues[u].position, u, tilts[ti]),
                             scenario.env);
        }
        return acc / static_cast<double>(n_call);
      },
      exec);
  return out;
}

UtilityCurve normalize_to_utility(std::span<const double> parameters,
                                  std::span<const double> raw_values) {
  if (parameters.size() != raw_values.size() || parameters.size() < 2) {
    throw ValidationError("normalization needs matching series with >= 2 points");
  }
  const auto [min_it, max_it] = std::minmax_element(raw_values.begin(), raw_values.end());
  if (*max_it <= *min_it) {
    throw ValidationError("cannot normalize a constant KPI series into a utility");
  }
  const double span = *max_it - *min_it;
  std::vector<CurveSample> samples;
  samples.reserve(parameters.size());
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    samples.push_back({parameters[i], (raw_values[i] - *min_it) / span});
  }
  return UtilityCurve(std::move(samples));
}

}  // namespace icr::ran
