/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <doctest.h>

#include <random>

#include "icr/curve.hpp"
#include "icr/errors.hpp"

using icr::CurveSample;
using icr::SampledSeries;
using icr::UtilityCurve;

TEST_CASE("curve construction rejects bad samples") {
  CHECK_THROWS_AS(UtilityCurve({{0.0, 0.5}}), icr::ValidationError);
  CHECK_THROWS_AS(UtilityCurve({{0.0, 0.5}, {0.0, 0.6}}), icr::ValidationError);
  CHECK_THROWS_AS(UtilityCurve({{1.0, 0.5}, {0.0, 0.6}}), icr::ValidationError);
  CHECK_THROWS_AS(UtilityCurve({{0.0, -0.1}, {1.0, 0.6}}), icr::ValidationError);
  CHECK_THROWS_AS(UtilityCurve({{0.0, 0.0}, {1.0, 1.2}}), icr::ValidationError);
}

TEST_CASE("curve evaluation") {
  const UtilityCurve ramp({{0.0, 0.0}, {15.0, 1.0}});
  CHECK(ramp.eval(0.0) == 0.0);
  CHECK(ramp.eval(15.0) == 1.0);
  CHECK(ramp.eval(7.5) == 0.5);

  const UtilityCurve flat({{0.0, 1.0}, {15.0, 1.0}});
  CHECK(flat.eval(3.0) == 1.0);

  CHECK_THROWS_AS(ramp.eval(-0.5), icr::DomainError);
  CHECK_THROWS_AS(ramp.eval(15.5), icr::DomainError);
}

TEST_CASE("curve returns exact utilities at sample points") {
  const UtilityCurve c({{0.0, 0.2}, {4.0, 0.9}, {9.0, 0.1}, {15.0, 0.7}});
  for (const auto& s : c.samples()) CHECK(c.eval(s.parameter) == s.utility);
}

TEST_CASE("interpolation stays between adjacent sample utilities") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> uu(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<CurveSample> samples;
    for (int t = 0; t <= 10; ++t) samples.push_back({static_cast<double>(t), uu(rng)});
    const UtilityCurve c(samples);
    for (int k = 0; k < 100; ++k) {
      const double t = uu(rng) * 10.0;
      const auto i = static_cast<std::size_t>(t);
      const double lo = std::min(samples[i].utility, samples[i + 1].utility);
      const double hi = std::max(samples[i].utility, samples[i + 1].utility);
      const double v = c.eval(t);
      CHECK(v >= lo - 1e-12);
      CHECK(v <= hi + 1e-12);
    }
  }
}

TEST_CASE("exact extrema on a sub-interval") {
  const UtilityCurve c({{0.0, 0.2}, {4.0, 0.9}, {9.0, 0.1}, {15.0, 0.7}});
  CHECK(c.max_on(0.0, 15.0) == 0.9);
  CHECK(c.min_on(0.0, 15.0) == 0.1);
  CHECK(c.max_on(5.0, 8.0) == c.eval(5.0));
  CHECK(c.min_utility() == 0.1);
  CHECK(c.max_utility() == 0.9);
}

TEST_CASE("sampled series evaluates like a curve without range limits") {
  const SampledSeries s{{0.0, 1.0, 2.0}, {3.0, 9.0, 6.0}};
  CHECK(s.eval(0.5) == 6.0);
  CHECK(s.eval(2.0) == 6.0);
  CHECK(s.max_value() == 9.0);
  CHECK_THROWS_AS(s.eval(-1.0), icr::DomainError);
}
