/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "icr/scenario.hpp"

#include <cmath>
#include <random>

#include "icr/errors.hpp"

namespace icr::ran {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

std::mt19937_64 placement_rng(std::uint64_t placement_seed, std::uint64_t stream) {
  std::seed_seq seq{placement_seed, stream};
  return std::mt19937_64(seq);
}

}  // namespace

std::vector<Vec2> ring_positions(std::size_t count, const RingPlacement& ring,
                                 std::uint64_t placement_seed, std::uint64_t stream) {
  if (!(ring.inner_radius_m >= 0.0) || !(ring.outer_radius_m > ring.inner_radius_m)) {
    throw ValidationError("ring placement needs 0 <= inner < outer radius");
  }
  auto rng = placement_rng(placement_seed, stream);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Vec2> out;
  out.reserve(count);
  const double r0 = ring.inner_radius_m * ring.inner_radius_m;
  const double r1 = ring.outer_radius_m * ring.outer_radius_m;
  for (std::size_t i = 0; i < count; ++i) {
    const double r = std::sqrt(r0 + unit(rng) * (r1 - r0));  // area-uniform
    const double a = unit(rng) * kTwoPi;
    out.push_back({ring.center.x + r * std::cos(a), ring.center.y + r * std::sin(a)});
  }
  return out;
}

std::vector<Vec2> disc_positions(std::size_t count, const DiscPlacement& disc,
                                 std::uint64_t placement_seed, std::uint64_t stream) {
  if (!(disc.radius_m > 0.0)) throw ValidationError("disc placement needs a positive radius");
  auto rng = placement_rng(placement_seed, stream);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Vec2> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double r = disc.radius_m * std::sqrt(unit(rng));
    const double a = unit(rng) * kTwoPi;
    out.push_back({disc.center.x + r * std::cos(a), disc.center.y + r * std::sin(a)});
  }
  return out;
}

RanScenario default_scenario() {
  RanScenario sc;

  const Vec2 sites[] = {{0.0, 0.0}, {1299.0, 750.0}, {-1299.0, 750.0}};
  const double azimuths[] = {0.0, 120.0, 240.0};
  for (std::size_t si = 0; si < 3; ++si) {
    for (const double az : azimuths) {
      Sector s;
      s.site_position = sites[si];
      s.azimuth_deg = az;
      s.antenna_height_m = 30.0;
      s.tx_power_dbm = 46.0;
      s.active = si == 0;  // neighbors are out of service
      sc.sectors.push_back(s);
    }
  }

  // 80 call-text UEs at and beyond the 500 m cell edge, 20 video UEs around
  // the coordination center inside the active cell.
  sc.ue_groups.push_back(
      {Service::call_text,
       ring_positions(80, {{0.0, 0.0}, 500.0, 650.0}, kDefaultPlacementSeed, 1)});
  sc.ue_groups.push_back(
      {Service::video, disc_positions(20, {{80.0, 15.0}, 25.0}, kDefaultPlacementSeed, 2)});

  return sc;
}

}  // namespace icr::ran
