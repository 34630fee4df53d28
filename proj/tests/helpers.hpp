/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "icr/bargain.hpp"
#include "icr/curve.hpp"

namespace icr::test {

using bargain::BargainingProblem;
using bargain::Interval;
using bargain::Player;

// Strictly increasing concave curve on [0, 15] with unit-step samples,
// min-max normalized so it attains 0 and 1.
inline UtilityCurve concave_rising(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> step(0.2, 1.0);
  std::vector<double> increments(15);
  for (auto& x : increments) x = step(rng);
  std::sort(increments.begin(), increments.end(), std::greater<>());
  std::vector<double> v{0.0};
  for (const double inc : increments) v.push_back(v.back() + inc);
  const double span = v.back() - v.front();
  std::vector<CurveSample> samples;
  for (int t = 0; t <= 15; ++t) {
    samples.push_back({static_cast<double>(t), (v[static_cast<std::size_t>(t)] - v.front()) / span});
  }
  return UtilityCurve(std::move(samples));
}

// Reflection across the domain midpoint; preserves concavity.
inline UtilityCurve mirrored(const UtilityCurve& curve) {
  const auto& in = curve.samples();
  std::vector<CurveSample> out;
  out.reserve(in.size());
  const double lo = in.front().parameter, hi = in.back().parameter;
  for (auto it = in.rbegin(); it != in.rend(); ++it) {
    out.push_back({lo + hi - it->parameter, it->utility});
  }
  return UtilityCurve(std::move(out));
}

// Concave-opposed pair (one rising, one falling) with zero disagreement.
inline BargainingProblem opposed_problem(std::mt19937_64& rng, double weight_a = 0.5,
                                         double resolution = 0.01) {
  UtilityCurve up = concave_rising(rng);
  UtilityCurve down = mirrored(concave_rising(rng));
  std::vector<Player> players{{"a", std::move(up), 0.0, weight_a},
                              {"b", std::move(down), 0.0, 1.0 - weight_a}};
  return BargainingProblem(std::move(players), {0.0, 15.0}, resolution);
}

inline UtilityCurve line(double u0, double u1, double lo = 0.0, double hi = 15.0) {
  return UtilityCurve({{lo, u0}, {hi, u1}});
}

inline BargainingProblem linear_duel(double weight_a = 0.5, double resolution = 0.01) {
  std::vector<Player> players{{"a", line(0.0, 1.0), 0.0, weight_a},
                              {"b", line(1.0, 0.0), 0.0, 1.0 - weight_a}};
  return BargainingProblem(std::move(players), {0.0, 15.0}, resolution);
}

// ---------------------------------------------------------------------------
// Brute-force oracles. They re-implement interpolation and the objectives
// from their definitions and trust nothing but the problem data, so they stay
// independent of the solver path they check.
// ---------------------------------------------------------------------------

inline double oracle_eval(const UtilityCurve& curve, double t) {
  const auto& s = curve.samples();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (t >= s[i].parameter && t <= s[i + 1].parameter) {
      const double w = (t - s[i].parameter) / (s[i + 1].parameter - s[i].parameter);
      return s[i].utility * (1.0 - w) + s[i + 1].utility * w;
    }
  }
  return s.back().utility;
}

inline std::vector<double> oracle_grid(const BargainingProblem& p, double step) {
  const auto n = static_cast<std::size_t>(std::llround((p.domain().hi - p.domain().lo) / step));
  std::vector<double> ts;
  ts.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) ts.push_back(p.domain().lo + static_cast<double>(k) * step);
  return ts;
}

inline bool oracle_feasible(const BargainingProblem& p, double t) {
  for (const auto& pl : p.players()) {
    if (oracle_eval(pl.curve, t) - pl.disagreement < -1e-12) return false;
  }
  return true;
}

// argmax of prod (u_i - d_i)^{w_i} over feasible grid points, smallest t wins ties.
inline double oracle_weighted_nash(const BargainingProblem& p, const std::vector<double>& w,
                                   double step = 0.001) {
  double best_t = p.domain().lo;
  double best = -1.0;
  for (const double t : oracle_grid(p, step)) {
    if (!oracle_feasible(p, t)) continue;
    double obj = 1.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double g = std::max(0.0, oracle_eval(p.players()[i].curve, t) -
                                         p.players()[i].disagreement);
      obj *= std::pow(g, w[i]);
    }
    if (obj > best) {
      best = obj;
      best_t = t;
    }
  }
  return best_t;
}

inline double oracle_nash(const BargainingProblem& p, double step = 0.001) {
  return oracle_weighted_nash(p, std::vector<double>(p.size(), 1.0), step);
}

// Equal-ratio point with the largest common ratio; falls back to the smallest
// ratio spread when no grid point equalizes the ratios.
inline double oracle_ksbs(const BargainingProblem& p, double step = 0.001) {
  std::vector<double> ideal(p.size(), -1.0);
  const auto ts = oracle_grid(p, step);
  for (const double t : ts) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      ideal[i] = std::max(ideal[i], oracle_eval(p.players()[i].curve, t));
    }
  }
  double best_equal_t = p.domain().lo, best_k = -1.0;
  double best_spread_t = p.domain().lo, best_spread = 1e300;
  for (const double t : ts) {
    if (!oracle_feasible(p, t)) continue;
    double rmin = 1e300, rmax = -1e300;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto& pl = p.players()[i];
      const double r = (oracle_eval(pl.curve, t) - pl.disagreement) / (ideal[i] - pl.disagreement);
      rmin = std::min(rmin, r);
      rmax = std::max(rmax, r);
    }
    const double spread = rmax - rmin;
    if (spread <= 1e-9 && rmin > best_k) {
      best_k = rmin;
      best_equal_t = t;
    }
    if (spread < best_spread) {
      best_spread = spread;
      best_spread_t = t;
    }
  }
  return best_k >= 0.0 ? best_equal_t : best_spread_t;
}

// Max entropy of the gain proportions; ties broken by larger total gain, then
// smaller t.
inline double oracle_sebs(const BargainingProblem& p, double step = 0.001) {
  double best_t = p.domain().lo, best_h = -1e300, best_total = -1.0;
  for (const double t : oracle_grid(p, step)) {
    if (!oracle_feasible(p, t)) continue;
    double total = 0.0;
    std::vector<double> gains;
    for (const auto& pl : p.players()) {
      gains.push_back(std::max(0.0, oracle_eval(pl.curve, t) - pl.disagreement));
      total += gains.back();
    }
    if (total <= 0.0) continue;
    double h = 0.0;
    for (const double g : gains) {
      const double share = g / total;
      if (share >= 1e-12) h -= share * std::log(share);
    }
    if (h > best_h || (h == best_h && total > best_total)) {
      best_h = h;
      best_total = total;
      best_t = t;
    }
  }
  return best_t;
}

inline double oracle_jain(const std::vector<double>& x) {
  double s = 0.0, s2 = 0.0;
  for (const double v : x) {
    s += v;
    s2 += v * v;
  }
  return s * s / (static_cast<double>(x.size()) * s2);
}

}  // namespace icr::test
