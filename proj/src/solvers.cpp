/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icr/bargain.hpp"
#include "icr/errors.hpp"

namespace icr::bargain {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double clamped_gain(const Player& p, double t) {
  return std::max(0.0, p.curve.eval(t) - p.disagreement);
}

double total_gain(const BargainingProblem& problem, double t) {
  double g = 0.0;
  for (const auto& p : problem.players()) g += clamped_gain(p, t);
  return g;
}

// Everything the solvers scan over: the feasible intervals and a sorted
// candidate list holding the refined grid restricted to them, the interval
// endpoints, every curve sample inside, and the midpoints of the elementary
// piecewise-linear segments. The midpoints matter for degeneracy detection:
// on an elementary segment a product of gains is either positive at the
// midpoint or identically zero on the segment.
struct SolveContext {
  std::vector<Interval> intervals;
  std::vector<double> candidates;

  Interval containing(double t) const {
    for (const auto& iv : intervals) {
      if (t >= iv.lo - 1e-12 && t <= iv.hi + 1e-12) return iv;
    }
    return {t, t};
  }
};

std::vector<double> segment_breakpoints(const BargainingProblem& problem, Interval iv) {
  std::vector<double> bps{iv.lo, iv.hi};
  for (const auto& p : problem.players()) {
    for (const auto& s : p.curve.samples()) {
      if (s.parameter > iv.lo && s.parameter < iv.hi) bps.push_back(s.parameter);
    }
  }
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  return bps;
}

SolveContext make_context(const BargainingProblem& problem) {
  SolveContext ctx;
  ctx.intervals = feasible_region(problem);

  const auto grid_points = grid::refined_grid(problem.domain(), problem.search_resolution());
  for (const auto& iv : ctx.intervals) {
    auto it = std::lower_bound(grid_points.begin(), grid_points.end(), iv.lo);
    for (; it != grid_points.end() && *it <= iv.hi; ++it) ctx.candidates.push_back(*it);

    const auto bps = segment_breakpoints(problem, iv);
    ctx.candidates.insert(ctx.candidates.end(), bps.begin(), bps.end());
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
      ctx.candidates.push_back(0.5 * (bps[i] + bps[i + 1]));
    }
  }
  std::sort(ctx.candidates.begin(), ctx.candidates.end());
  ctx.candidates.erase(std::unique(ctx.candidates.begin(), ctx.candidates.end()),
                       ctx.candidates.end());
  return ctx;
}

Solution finish(const BargainingProblem& problem, Method method, double t) {
  Solution s;
  s.method = method;
  s.parameter = t;
  s.utilities.reserve(problem.size());
  s.gains.reserve(problem.size());
  for (const auto& p : problem.players()) {
    const double u = p.curve.eval(t);
    s.utilities.push_back(u);
    s.gains.push_back(std::max(0.0, u - p.disagreement));
  }
  s.jfi = jain_index(s.utilities);
  return s;
}

// Weighted Nash objective in the log domain; -inf marks a zero weighted
// product. Zero-weight players drop out (g^0 = 1).
double log_weighted_product(const BargainingProblem& problem, const std::vector<double>& weights,
                            double t) {
  double s = 0.0;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    const double g = clamped_gain(problem.players()[i], t);
    if (g <= 0.0) return kNegInf;
    s += weights[i] * std::log(g);
  }
  return s;
}

Solution solve_weighted_product(const BargainingProblem& problem,
                                const std::vector<double>& weights, Method method, Exec exec) {
  const auto ctx = make_context(problem);
  const auto& ts = ctx.candidates;

  auto best = grid::scan_argmax<double>(
      ts.size(), [&](std::size_t i) { return log_weighted_product(problem, weights, ts[i]); },
      exec);

  double t_star;
  std::string note;
  if (std::isinf(best.score)) {
    // The weighted product vanishes at every feasible point; fall back to the
    // total gain (piecewise linear, so the candidate set contains its argmax).
    best = grid::scan_argmax<double>(
        ts.size(), [&](std::size_t i) { return total_gain(problem, ts[i]); }, exec);
    t_star = ts[best.index];
    note = "product of gains is zero everywhere; maximized the total gain instead";
  } else {
    t_star = ts[best.index];
    const Interval iv = ctx.containing(t_star);
    const double lo = std::max(iv.lo, t_star - problem.search_resolution());
    const double hi = std::min(iv.hi, t_star + problem.search_resolution());
    if (lo < hi) {
      const auto [t_ref, s_ref] = grid::golden_max(
          [&](double t) { return log_weighted_product(problem, weights, t); }, lo, hi);
      if (s_ref > best.score) t_star = t_ref;
    }
  }

  Solution s = finish(problem, method, t_star);
  double objective = 1.0;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    objective *= method == Method::nbs ? s.gains[i] : std::pow(s.gains[i], weights[i]);
  }
  s.objective = objective;
  s.note = std::move(note);
  return s;
}

}  // namespace

Solution solve_nbs(const BargainingProblem& problem, Exec exec) {
  const std::vector<double> equal(problem.size(), 1.0 / static_cast<double>(problem.size()));
  return solve_weighted_product(problem, equal, Method::nbs, exec);
}

Solution solve_wnbs(const BargainingProblem& problem, Exec exec) {
  return solve_weighted_product(problem, problem.weights(), Method::wnbs, exec);
}

namespace {

struct RatioView {
  const BargainingProblem& problem;
  std::vector<double> scale;  // 1 / (ideal_i - d_i)

  double ratio(std::size_t i, double t) const {
    const auto& p = problem.players()[i];
    return (p.curve.eval(t) - p.disagreement) * scale[i];
  }

  double min_ratio(double t) const {
    double m = ratio(0, t);
    for (std::size_t i = 1; i < problem.size(); ++i) m = std::min(m, ratio(i, t));
    return m;
  }

  double spread(double t) const {
    double lo = ratio(0, t), hi = lo;
    for (std::size_t i = 1; i < problem.size(); ++i) {
      const double r = ratio(i, t);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    return hi - lo;
  }
};

}  // namespace

Solution solve_ksbs(const BargainingProblem& problem, Exec exec) {
  const auto ideal = ideal_point(problem, exec);
  RatioView view{problem, {}};
  view.scale.reserve(problem.size());
  for (std::size_t i = 0; i < problem.size(); ++i) {
    const double reach = ideal[i] - problem.players()[i].disagreement;
    if (reach <= 1e-12) {
      throw DegeneratePlayer("player '" + problem.players()[i].id +
                                 "' cannot gain: ideal utility equals its disagreement level",
                             problem.players()[i].id);
    }
    view.scale.push_back(1.0 / reach);
  }

  const auto intervals = feasible_region(problem);
  const std::size_t n = problem.size();

  // Equal-ratio points, found exactly: on each elementary segment every
  // normalized gain is linear, so the simultaneous-equality set is empty, a
  // single point, or a sub-interval.
  struct EqualPoint {
    double t;
    double k;
  };
  std::vector<EqualPoint> equal_points;

  auto push_candidate = [&](double t) { equal_points.push_back({t, view.min_ratio(t)}); };

  for (const auto& iv : intervals) {
    if (iv.hi - iv.lo <= 1e-12) {
      if (view.spread(iv.lo) <= 1e-9) push_candidate(iv.lo);
      continue;
    }
    const auto bps = segment_breakpoints(problem, iv);
    for (std::size_t si = 0; si + 1 < bps.size(); ++si) {
      const double a = bps[si], b = bps[si + 1];
      bool alive = true;
      bool is_point = false;
      double x = a, y = b;  // surviving interval, or point x when collapsed
      for (std::size_t i = 1; i < n && alive; ++i) {
        const double da = view.ratio(i, a) - view.ratio(0, a);
        const double db = view.ratio(i, b) - view.ratio(0, b);
        const double slope = (db - da) / (b - a);
        if (is_point) {
          const double dp = da + (x - a) * slope;
          alive = std::abs(dp) <= 1e-9;
          continue;
        }
        if (std::abs(slope) < 1e-14) {
          alive = std::abs(da + (0.5 * (x + y) - a) * slope) <= 1e-12;
          continue;
        }
        const double root = a - da / slope;
        if (root >= x - 1e-12 && root <= y + 1e-12) {
          x = std::clamp(root, x, y);
          is_point = true;
        } else {
          alive = false;
        }
      }
      if (!alive) continue;
      if (is_point) {
        push_candidate(x);
      } else {
        push_candidate(x);
        push_candidate(y);
      }
    }
  }

  if (!equal_points.empty()) {
    // The maximal common ratio; ties resolve to the smallest parameter.
    const EqualPoint* best = &equal_points.front();
    for (const auto& ep : equal_points) {
      if (ep.k > best->k || (ep.k == best->k && ep.t < best->t)) best = &ep;
    }
    Solution s = finish(problem, Method::ksbs, best->t);
    s.objective = best->k;
    s.residual = view.spread(best->t);
    return s;
  }

  // No equal-ratio point exists in the feasible region: return the point
  // minimizing the ratio spread, flagged non-exact. The spread is piecewise
  // linear between ratio crossings, so the exact minimum sits on a breakpoint
  // or a pairwise crossing.
  double best_t = intervals.front().lo;
  double best_spread = view.spread(best_t);
  auto consider = [&](double t) {
    const double sp = view.spread(t);
    if (sp < best_spread || (sp == best_spread && t < best_t)) {
      best_spread = sp;
      best_t = t;
    }
  };
  for (const auto& iv : intervals) {
    const auto bps = segment_breakpoints(problem, iv);
    for (const double t : bps) consider(t);
    for (std::size_t si = 0; si + 1 < bps.size(); ++si) {
      const double a = bps[si], b = bps[si + 1];
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const double da = view.ratio(i, a) - view.ratio(j, a);
          const double db = view.ratio(i, b) - view.ratio(j, b);
          if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
            consider(a + da / (da - db) * (b - a));
          }
        }
      }
    }
  }

  Solution s = finish(problem, Method::ksbs, best_t);
  s.objective = view.min_ratio(best_t);
  s.residual = best_spread;
  s.exact = false;
  s.note = "no equal-ratio point in the feasible region; returning the spread-minimizing value";
  return s;
}

namespace {

constexpr double kProportionFloor = 1e-12;
constexpr double kTotalGainTolerance = 1e-3;

double entropy_of_gains(const BargainingProblem& problem, double t, double total) {
  double h = 0.0;
  for (const auto& p : problem.players()) {
    const double share = clamped_gain(p, t) / total;
    if (share >= kProportionFloor) h -= share * std::log(share);
  }
  return h;
}

}  // namespace

Solution solve_sebs(const BargainingProblem& problem, Exec exec) {
  const auto ctx = make_context(problem);
  const auto& ts = ctx.candidates;
  const std::optional<double> target = problem.sebs_total_gain();

  using Score = std::pair<double, double>;  // (entropy, total gain)
  auto eval = [&](std::size_t i) -> std::optional<Score> {
    const double t = ts[i];
    const double total = total_gain(problem, t);
    if (total <= 0.0) return std::nullopt;
    if (target && std::abs(total - *target) > kTotalGainTolerance) return std::nullopt;
    return Score{entropy_of_gains(problem, t, total), total};
  };

  const auto best = grid::scan_argmax<Score>(ts.size(), eval, exec);

  if (!best.valid()) {
    if (target) {
      double nearest = total_gain(problem, ts.front());
      for (const double t : ts) {
        const double g = total_gain(problem, t);
        if (std::abs(g - *target) < std::abs(nearest - *target)) nearest = g;
      }
      throw InfeasibleGoal("no feasible parameter reaches the requested total gain within " +
                               std::to_string(kTotalGainTolerance) + "; nearest achievable is " +
                               std::to_string(nearest),
                           nearest);
    }
    // Zero total gain everywhere: degenerate allocation, keep the smallest
    // feasible parameter.
    Solution s = finish(problem, Method::sebs, ts.front());
    s.objective = 0.0;
    s.note = "total gain is zero everywhere; returning the smallest feasible parameter";
    return s;
  }

  double t_star = ts[best.index];
  Score score_star = best.score;
  if (!target) {
    const Interval iv = ctx.containing(t_star);
    const double lo = std::max(iv.lo, t_star - problem.search_resolution());
    const double hi = std::min(iv.hi, t_star + problem.search_resolution());
    if (lo < hi) {
      const auto [t_ref, h_ref] = grid::golden_max(
          [&](double t) {
            const double total = total_gain(problem, t);
            return total > 0.0 ? entropy_of_gains(problem, t, total) : kNegInf;
          },
          lo, hi);
      const double total_ref = total_gain(problem, t_ref);
      if (total_ref > 0.0 && Score{h_ref, total_ref} > score_star) {
        t_star = t_ref;
        score_star = {h_ref, total_ref};
      }
    }
  }

  Solution s = finish(problem, Method::sebs, t_star);
  s.objective = score_star.first;
  if (!target) {
    s.note = "no total-gain target set; maximizing entropy with a total-gain tie-break";
  }
  return s;
}

}  // namespace icr::bargain
