/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "icr/curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "icr/errors.hpp"

namespace icr {

namespace {

constexpr double kSpanSlack = 1e-9;

double interp_segment(double x0, double y0, double x1, double y1, double x) {
  return y0 + (x - x0) * (y1 - y0) / (x1 - x0);
}

// Shared piecewise-linear evaluation. `xs` strictly increasing.
double eval_pl(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  if (x < xs.front() - kSpanSlack || x > xs.back() + kSpanSlack) {
    throw DomainError("parameter " + std::to_string(x) + " outside sampled span [" +
                      std::to_string(xs.front()) + ", " + std::to_string(xs.back()) + "]");
  }
  x = std::clamp(x, xs.front(), xs.back());
  const auto it = std::lower_bound(xs.begin(), xs.end(), x);
  const auto i = static_cast<std::size_t>(it - xs.begin());
  if (i < xs.size() && xs[i] == x) return ys[i];
  return interp_segment(xs[i - 1], ys[i - 1], xs[i], ys[i], x);
}

}  // namespace

UtilityCurve::UtilityCurve(std::vector<CurveSample> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 2) throw ValidationError("utility curve needs at least 2 samples");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& s = samples_[i];
    if (!std::isfinite(s.parameter) || !std::isfinite(s.utility)) {
      throw ValidationError("utility curve sample not finite");
    }
    if (s.utility < 0.0 || s.utility > 1.0) {
      throw ValidationError("utility " + std::to_string(s.utility) + " outside [0, 1]");
    }
    if (i > 0 && samples_[i - 1].parameter >= s.parameter) {
      throw ValidationError("curve parameters must be strictly increasing");
    }
  }
}

double UtilityCurve::eval(double parameter) const {
  if (parameter < min_parameter() - kSpanSlack || parameter > max_parameter() + kSpanSlack) {
    throw DomainError("parameter " + std::to_string(parameter) + " outside curve span [" +
                      std::to_string(min_parameter()) + ", " + std::to_string(max_parameter()) +
                      "]");
  }
  const double t = std::clamp(parameter, min_parameter(), max_parameter());
  const auto it = std::lower_bound(
      samples_.begin(), samples_.end(), t,
      [](const CurveSample& s, double v) { return s.parameter < v; });
  const auto i = static_cast<std::size_t>(it - samples_.begin());
  if (i < samples_.size() && samples_[i].parameter == t) return samples_[i].utility;
  const auto& a = samples_[i - 1];
  const auto& b = samples_[i];
  return interp_segment(a.parameter, a.utility, b.parameter, b.utility, t);
}

double UtilityCurve::min_on(double lo, double hi) const {
  double m = std::min(eval(lo), eval(hi));
  for (const auto& s : samples_) {
    if (s.parameter > lo && s.parameter < hi) m = std::min(m, s.utility);
  }
  return m;
}

double UtilityCurve::max_on(double lo, double hi) const {
  double m = std::max(eval(lo), eval(hi));
  for (const auto& s : samples_) {
    if (s.parameter > lo && s.parameter < hi) m = std::max(m, s.utility);
  }
  return m;
}

double UtilityCurve::min_utility() const {
  double m = samples_.front().utility;
  for (const auto& s : samples_) m = std::min(m, s.utility);
  return m;
}

double UtilityCurve::max_utility() const {
  double m = samples_.front().utility;
  for (const auto& s : samples_) m = std::max(m, s.utility);
  return m;
}

double SampledSeries::eval(double parameter) const {
  if (parameters.size() < 2 || parameters.size() != values.size()) {
    throw ValidationError("sampled series needs matching grids with >= 2 points");
  }
  return eval_pl(parameters, values, parameter);
}

double SampledSeries::max_value() const {
  if (values.empty()) throw ValidationError("empty series");
  return *std::max_element(values.begin(), values.end());
}

}  // namespace icr
