/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <vector>

namespace icr {

struct CurveSample {
  double parameter;  // degrees
  double utility;    // dimensionless
};

/// Sampled utility function of one control parameter, read piecewise-linearly
/// between adjacent samples.
///
/// Invariants enforced at construction: at least two samples, strictly
/// increasing parameters, every utility in [0, 1].
class UtilityCurve {
 public:
  explicit UtilityCurve(std::vector<CurveSample> samples);

  /// Utility at `parameter`. Exact sample value at sample points, linear
  /// interpolation between neighbors. Throws DomainError outside the span.
  double eval(double parameter) const;

  double min_parameter() const { return samples_.front().parameter; }
  double max_parameter() const { return samples_.back().parameter; }

  /// Exact extrema of the interpolated curve on [lo, hi] (attained at a
  /// sample or at an interval end).
  double min_on(double lo, double hi) const;
  double max_on(double lo, double hi) const;

  double min_utility() const;
  double max_utility() const;

  const std::vector<CurveSample>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }

 private:
  std::vector<CurveSample> samples_;
};

/// Raw KPI series over a parameter grid (no range restriction), with the same
/// piecewise-linear reading as UtilityCurve.
struct SampledSeries {
  std::vector<double> parameters;
  std::vector<double> values;

  double eval(double parameter) const;
  double max_value() const;
};

}  // namespace icr
