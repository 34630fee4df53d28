/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace icr::grid {

/// Execution policy for the data-parallel kernels. Both policies produce
/// bit-identical results; the serial path is the reference the parallel one
/// is tested against.
enum class Exec { serial, parallel };

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// Best score seen by a scan and the lowest index attaining it.
template <typename Score>
struct ScanResult {
  Score score{};
  std::size_t index = npos;

  bool valid() const { return index != npos; }

  void consider(const Score& s, std::size_t i) {
    if (!valid() || score < s || (!(s < score) && i < index)) {
      score = s;
      index = i;
    }
  }

  // Commutative and associative for any strict weak order on Score, so the
  // merge order across threads cannot change the outcome.
  void merge(const ScanResult& other) {
    if (other.valid()) consider(other.score, other.index);
  }
};

/// Argmax of `eval` over indices [0, n). `eval` must be a pure function
/// returning std::optional<Score> (nullopt = skip) with no NaN scores.
/// Ties resolve to the lowest index under either execution policy.
template <typename Score, typename Eval>
ScanResult<Score> scan_argmax(std::size_t n, Eval&& eval, Exec exec = Exec::parallel) {
  ScanResult<Score> best;
#ifdef _OPENMP
  if (exec == Exec::parallel && n > 256) {
#pragma omp parallel
    {
      ScanResult<Score> local;
#pragma omp for schedule(static) nowait
      for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const std::optional<Score> s = eval(static_cast<std::size_t>(i));
        if (s) local.consider(*s, static_cast<std::size_t>(i));
      }
#pragma omp critical(icr_scan_argmax)
      best.merge(local);
    }
    return best;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) {
    const std::optional<Score> s = eval(i);
    if (s) best.consider(*s, i);
  }
  return best;
}

/// Evaluate `fn` at indices [0, n) into a vector; parallel over disjoint
/// slots, so ordering cannot affect the result.
template <typename Fn>
std::vector<double> map_values(std::size_t n, Fn&& fn, Exec exec = Exec::parallel) {
  std::vector<double> out(n);
#ifdef _OPENMP
  if (exec == Exec::parallel && n > 32) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    }
    return out;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
  return out;
}

/// Closed interval of the control parameter.
struct Interval {
  double lo;
  double hi;
};

/// Uniform grid lo, lo+res, ... covering [lo, hi]; the endpoint is always
/// included (appended when the span is not a multiple of res).
std::vector<double> refined_grid(Interval domain, double resolution);

/// Golden-section maximization of a continuous function on [lo, hi].
/// Returns (argmax, value). Deterministic; accurate to ~1e-13 in x for
/// unimodal inputs.
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 120 && (b - a) > 1e-13; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

}  // namespace icr::grid
