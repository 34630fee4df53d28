/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "icr/curve.hpp"
#include "icr/grid.hpp"

namespace icr::ran {

using grid::Exec;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Parabolic sector pattern: per-plane attenuations capped by the side-lobe
/// levels, their sum capped by the overall floor.
struct AntennaPattern {
  double boresight_gain_dbi = 10.0;
  double vertical_hpbw_deg = 10.0;
  double horizontal_hpbw_deg = 70.0;
  double vertical_sla_db = 18.0;    // attenuation magnitudes, positive
  double horizontal_sla_db = 20.0;
  double overall_floor_db = 30.0;
};

struct Sector {
  Vec2 site_position;
  double azimuth_deg = 0.0;
  double antenna_height_m = 30.0;
  double tx_power_dbm = 46.0;
  bool active = true;
  double tilt_deg = 0.0;  // current setting; KPI sweeps override it per evaluation
};

enum class Service { call_text, video };

struct UeGroup {
  Service service;
  std::vector<Vec2> positions;
};

inline constexpr std::array<double, 16> kDefaultCqiThresholdsDb = {
    -6.0, -4.0, -2.0, 0.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0, 18.0, 20.0, 22.0, 24.0};

struct RadioEnvironment {
  double pathloss_intercept_db = 128.1;
  double pathloss_slope_db_per_decade = 37.6;
  double shadowing_std_db = 8.0;
  double noise_figure_db = 9.0;
  double bandwidth_hz = 5e6;
  double thermal_noise_density_dbm_hz = -174.0;
  std::uint64_t rng_seed = 42;
  std::array<double, 16> cqi_thresholds_db = kDefaultCqiThresholdsDb;
};

struct TiltGrid {
  double min_deg = 0.0;
  double max_deg = 15.0;
  double step_deg = 1.0;

  std::vector<double> values() const;
};

/// One active three-sector site plus inactive neighbors, two UE service
/// groups, and the radio environment. The tilt parameter raises the beam
/// from `boresight_ref_depression_deg` toward the horizon, extending
/// coverage outward.
struct RanScenario {
  AntennaPattern antenna;
  double boresight_ref_depression_deg = 20.0;
  double ue_height_m = 1.5;
  std::vector<Sector> sectors;
  std::vector<UeGroup> ue_groups;
  RadioEnvironment env;
  TiltGrid tilt_grid;

  std::size_t total_ues() const;
  void validate() const;
};

struct KpiCurves {
  std::vector<double> tilt_grid;
  std::vector<double> mean_sinr_db;  // averaged over video UEs
  std::vector<double> mean_cqi;      // averaged over call-text UEs
};

/// Pattern gain at the given vertical/horizontal offsets for a beam steered
/// to `tilt_deg` in the vertical plane. Angles in degrees; vertical in
/// [-90, 90], horizontal in [-180, 180].
double antenna_gain_dbi(const AntennaPattern& pattern, double vertical_deg, double horizontal_deg,
                        double tilt_deg);

/// Log-distance macro-cell path loss; throws DomainError for distance <= 0.
double path_loss_db(const RadioEnvironment& env, double distance_m);

/// Zero-mean log-normal shadowing, deterministic per (seed, link id).
double shadowing_db(const RadioEnvironment& env, std::uint64_t link_id);

/// Thermal noise over the configured bandwidth plus the receiver noise figure.
double noise_floor_dbm(const RadioEnvironment& env);

/// Link budget for one sector-UE link. `ue_index` keys the shadowing draw.
/// Throws ValidationError for inactive sectors.
double rx_power_dbm(const RanScenario& scenario, std::size_t sector_index, Vec2 ue_position,
                    std::size_t ue_index, double tilt_deg);

/// Serving-sector SINR: strongest active sector over the sum of the other
/// active sectors plus noise, combined in the linear domain.
double compute_sinr_db(const RanScenario& scenario, Vec2 ue_position, std::size_t ue_index,
                       double tilt_deg);

/// Threshold lookup, clamped to [0, 15]; nondecreasing in SINR.
int sinr_to_cqi(double sinr_db, std::span<const double> thresholds_db);
int sinr_to_cqi(double sinr_db, const RadioEnvironment& env);

/// Sweeps the tilt grid: per tilt, mean SINR over video UEs and mean CQI over
/// call-text UEs. Deterministic for a fixed scenario and seed under either
/// execution policy.
KpiCurves build_kpi_curves(const RanScenario& scenario, Exec exec = Exec::parallel);

/// Min-max normalization of a raw KPI series into a utility curve attaining
/// 0 and 1. Throws ValidationError for constant input.
UtilityCurve normalize_to_utility(std::span<const double> parameters,
                                  std::span<const double> raw_values);

}  // namespace icr::ran
