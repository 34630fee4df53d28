/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <benchmark/benchmark.h>

#include <cmath>
#include <optional>

#include "icr/grid.hpp"
#include "icr/ran.hpp"
#include "icr/scenario.hpp"

namespace {

using icr::grid::Exec;

// Synthetic smooth objective over a large grid; stands in for a bargaining
// objective scan at very fine resolution.
double objective(std::size_t i) {
  const double t = static_cast<double>(i) * 1e-6;
  return std::sin(t * 12.9898) * std::cos(t * 4.1414) - (t - 7.5) * (t - 7.5) * 1e-3;
}

void bm_scan_argmax(benchmark::State& state, Exec exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto best = icr::grid::scan_argmax<double>(
        n, [](std::size_t i) -> std::optional<double> { return objective(i); }, exec);
    benchmark::DoNotOptimize(best);
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(n));
}

icr::ran::RanScenario dense_scenario() {
  auto sc = icr::ran::default_scenario();
  sc.env.shadowing_std_db = 0.0;
  sc.tilt_grid.step_deg = 0.125;  // 121 tilt evaluations per sweep
  return sc;
}

void bm_kpi_curves(benchmark::State& state, Exec exec) {
  const auto scenario = dense_scenario();
  for (auto _ : state) {
    auto curves = icr::ran::build_kpi_curves(scenario, exec);
    benchmark::DoNotOptimize(curves);
  }
}

}  // namespace

BENCHMARK_CAPTURE(bm_scan_argmax, serial, Exec::serial)->Arg(1 << 22)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_scan_argmax, parallel, Exec::parallel)->Arg(1 << 22)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_kpi_curves, serial, Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_kpi_curves, parallel, Exec::parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
