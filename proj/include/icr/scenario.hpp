/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <vector>

#include "icr/ran.hpp"

namespace icr::ran {

/// Position generation draws from its own stream so the KPI outputs stay
/// identical under different radio seeds (shadowing off), while positions
/// remain i.i.d. uniform snapshots.
inline constexpr std::uint64_t kDefaultPlacementSeed = 9001;

struct RingPlacement {
  Vec2 center;
  double inner_radius_m;
  double outer_radius_m;
};

struct DiscPlacement {
  Vec2 center;
  double radius_m;
};

/// Area-uniform draws over an annulus / disc, deterministic per
/// (placement_seed, stream).
std::vector<Vec2> ring_positions(std::size_t count, const RingPlacement& ring,
                                 std::uint64_t placement_seed, std::uint64_t stream);
std::vector<Vec2> disc_positions(std::size_t count, const DiscPlacement& disc,
                                 std::uint64_t placement_seed, std::uint64_t stream);

/// The disaster-recovery layout: one active three-sector site, two inactive
/// neighbor sites, 80 call-text UEs on a ring at and beyond the cell edge,
/// 20 video UEs on a disc near the coordination center. Shadowing on
/// (std 8 dB), seed 42, tilt grid 0..15 step 1.
RanScenario default_scenario();

}  // namespace icr::ran
