/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "icr/grid.hpp"

#include <algorithm>
#include <cmath>

#include "icr/errors.hpp"

namespace icr::grid {

std::vector<double> refined_grid(Interval domain, double resolution) {
  if (!(domain.lo < domain.hi)) throw ValidationError("empty parameter domain");
  if (!(resolution > 0.0)) throw ValidationError("resolution must be positive");
  const double span = domain.hi - domain.lo;
  const auto steps = static_cast<std::size_t>(std::floor(span / resolution + 1e-9));
  std::vector<double> g;
  g.reserve(steps + 2);
  for (std::size_t i = 0; i <= steps; ++i) {
    g.push_back(std::min(domain.lo + static_cast<double>(i) * resolution, domain.hi));
  }
  if (g.back() < domain.hi - 1e-12) g.push_back(domain.hi);
  return g;
}

}  // namespace icr::grid
