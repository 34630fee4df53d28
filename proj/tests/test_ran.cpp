/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include <cmath>
#include <set>

#include "icr/errors.hpp"
#include "icr/ran.hpp"
#include "icr/scenario.hpp"

using namespace icr;
using namespace icr::ran;

namespace {

RanScenario single_sector_scenario() {
  RanScenario sc;
  sc.boresight_ref_depression_deg = 0.0;  // tilt steers the boresight directly
  Sector s;
  s.site_position = {0.0, 0.0};
  s.azimuth_deg = 0.0;
  s.antenna_height_m = 0.0;  // boresight hits ground targets head-on
  s.tx_power_dbm = 46.0;
  sc.sectors.push_back(s);
  sc.ue_groups.push_back({Service::call_text, {{1000.0, 0.0}}});
  sc.ue_groups.push_back({Service::video, {{500.0, 0.0}}});
  sc.env.shadowing_std_db = 0.0;
  sc.ue_height_m = 0.0;
  return sc;
}

}  // namespace

TEST_CASE("antenna pattern values") {
  const AntennaPattern p;
  CHECK(antenna_gain_dbi(p, 0.0, 0.0, 0.0) == 10.0);              // boresight
  CHECK(antenna_gain_dbi(p, 5.0, 0.0, 0.0) == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(antenna_gain_dbi(p, 90.0, 180.0, 0.0) == doctest::Approx(-20.0).epsilon(1e-12));
  CHECK(antenna_gain_dbi(p, 12.0, 0.0, 12.0) == 10.0);            // steered boresight

  CHECK_THROWS_AS(antenna_gain_dbi(p, 91.0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(antenna_gain_dbi(p, 0.0, 181.0, 0.0), DomainError);
}

TEST_CASE("antenna gain stays within its floor and peak") {
  const AntennaPattern p;
  for (double v = -90.0; v <= 90.0; v += 3.7) {
    for (double h = -180.0; h <= 180.0; h += 7.3) {
      for (double tilt = 0.0; tilt <= 15.0; tilt += 5.0) {
        const double g = antenna_gain_dbi(p, v, h, tilt);
        CHECK(g <= p.boresight_gain_dbi);
        CHECK(g >= p.boresight_gain_dbi - p.overall_floor_db);
      }
    }
  }
}

TEST_CASE("antenna gain peaks when the beam aligns with the target") {
  const AntennaPattern p;
  const double target_v = 8.0;
  const double aligned = antenna_gain_dbi(p, target_v, 0.0, 8.0);
  for (double tilt = 0.0; tilt <= 15.0; tilt += 0.5) {
    CHECK(aligned >= antenna_gain_dbi(p, target_v, 0.0, tilt));
  }
}

TEST_CASE("path loss model") {
  const RadioEnvironment env;
  CHECK(path_loss_db(env, 1000.0) == doctest::Approx(128.1).epsilon(1e-12));
  CHECK(path_loss_db(env, 100.0) == doctest::Approx(90.5).epsilon(1e-12));
  CHECK(path_loss_db(env, 600.0) > path_loss_db(env, 500.0));
  CHECK_THROWS_AS(path_loss_db(env, 0.0), DomainError);
  CHECK_THROWS_AS(path_loss_db(env, -5.0), DomainError);
}

TEST_CASE("shadowing is deterministic per link and has the configured spread") {
  RadioEnvironment env;
  env.shadowing_std_db = 0.0;
  for (std::uint64_t link = 0; link < 32; ++link) CHECK(shadowing_db(env, link) == 0.0);

  env.shadowing_std_db = 8.0;
  CHECK(shadowing_db(env, 7) == shadowing_db(env, 7));
  CHECK(shadowing_db(env, 7) != shadowing_db(env, 8));
  RadioEnvironment other = env;
  other.rng_seed = 43;
  CHECK(shadowing_db(env, 7) != shadowing_db(other, 7));

  // Monte-Carlo spread over 1e5 links
  const std::size_t n = 100000;
  double sum = 0.0, sum_sq = 0.0;
  for (std::uint64_t link = 0; link < n; ++link) {
    const double v = shadowing_db(env, link);
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / n;
  const double std_dev = std::sqrt(sum_sq / n - mean * mean);
  CHECK(std::abs(std_dev - 8.0) <= 0.2);
  CHECK(std::abs(mean) <= 0.2);
}

TEST_CASE("link budget arithmetic") {
  const auto sc = single_sector_scenario();
  // 46 dBm + 10 dBi - 128.1 dB at one boresight kilometer
  CHECK(rx_power_dbm(sc, 0, {1000.0, 0.0}, 0, 0.0) == doctest::Approx(-72.1).epsilon(1e-9));
  // doubling the distance costs the log-distance slope
  const double near = rx_power_dbm(sc, 0, {500.0, 0.0}, 0, 0.0);
  const double far = rx_power_dbm(sc, 0, {1000.0, 0.0}, 0, 0.0);
  CHECK(near - far == doctest::Approx(37.6 * std::log10(2.0)).epsilon(1e-9));

  auto inactive = sc;
  inactive.sectors[0].active = false;
  CHECK_THROWS_AS(rx_power_dbm(inactive, 0, {1000.0, 0.0}, 0, 0.0), ValidationError);
}

TEST_CASE("noise floor for the default environment") {
  const RadioEnvironment env;
  CHECK(noise_floor_dbm(env) == doctest::Approx(-98.0103).epsilon(1e-4));
}

TEST_CASE("sinr in the interference-free limit equals snr") {
  const auto sc = single_sector_scenario();
  const double rx = rx_power_dbm(sc, 0, {1000.0, 0.0}, 0, 0.0);
  const double sinr = compute_sinr_db(sc, {1000.0, 0.0}, 0, 0.0);
  CHECK(sinr == doctest::Approx(rx - noise_floor_dbm(sc.env)).epsilon(1e-9));
}

TEST_CASE("an added interferer strictly lowers sinr") {
  auto sc = single_sector_scenario();
  const double before = compute_sinr_db(sc, {1000.0, 0.0}, 0, 0.0);
  Sector interferer;
  interferer.site_position = {2500.0, 0.0};
  interferer.azimuth_deg = 180.0;
  interferer.antenna_height_m = 0.0;
  sc.sectors.push_back(interferer);
  const double after = compute_sinr_db(sc, {1000.0, 0.0}, 0, 0.0);
  CHECK(after < before);

  sc.sectors[0].active = false;
  sc.sectors[1].active = false;
  CHECK_THROWS_AS(compute_sinr_db(sc, {1000.0, 0.0}, 0, 0.0), ValidationError);
}

TEST_CASE("sinr-to-cqi lookup") {
  const RadioEnvironment env;
  CHECK(sinr_to_cqi(-30.0, env) == 0);
  CHECK(sinr_to_cqi(50.0, env) == 15);
  CHECK(sinr_to_cqi(10.0, env) == 8);  // threshold table entry at the 10 dB bin

  // nondecreasing step function covering exactly 0..15
  std::set<int> seen;
  int prev = 0;
  for (double sinr = -20.0; sinr <= 30.0; sinr += 0.125) {
    const int cqi = sinr_to_cqi(sinr, env);
    CHECK(cqi >= prev);
    prev = cqi;
    seen.insert(cqi);
  }
  CHECK(seen.size() == 16);
  CHECK(*seen.begin() == 0);
  CHECK(*seen.rbegin() == 15);
}

TEST_CASE("normalization maps a raw series onto [0, 1]") {
  const std::vector<double> params{0.0, 1.0, 2.0};
  const std::vector<double> raw{3.0, 6.0, 9.0};
  const UtilityCurve u = normalize_to_utility(params, raw);
  CHECK(u.samples()[0].utility == 0.0);
  CHECK(u.samples()[1].utility == 0.5);
  CHECK(u.samples()[2].utility == 1.0);

  // idempotent on an already-normalized series
  const std::vector<double> unit{0.0, 0.25, 1.0};
  const UtilityCurve v = normalize_to_utility(params, unit);
  for (std::size_t i = 0; i < unit.size(); ++i) CHECK(v.samples()[i].utility == unit[i]);

  const std::vector<double> constant{2.0, 2.0, 2.0};
  CHECK_THROWS_AS(static_cast<void>(normalize_to_utility(params, constant)), ValidationError);
}

TEST_CASE("normalization preserves extremum positions") {
  const std::vector<double> params{0.0, 1.0, 2.0, 3.0, 4.0};
  const std::vector<double> raw{5.0, 2.0, 7.5, 7.0, 3.0};
  const UtilityCurve u = normalize_to_utility(params, raw);
  CHECK(u.samples()[1].utility == 0.0);
  CHECK(u.samples()[2].utility == 1.0);
  double lo = 1e300, hi = -1e300;
  for (const auto& s : u.samples()) {
    lo = std::min(lo, s.utility);
    hi = std::max(hi, s.utility);
  }
  CHECK(lo == 0.0);
  CHECK(hi == 1.0);
}
