// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "risfso/geometry.hpp"
#include "risfso/linkbudget.hpp"
#include "risfso/sweep.hpp"
#include "risfso/units.hpp"

namespace {

void bm_depth_lower_bound(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(risfso::geometry::depth_lower_bound(
        0.05, risfso::deg_to_rad(51.0), 1.2));
  }
}
BENCHMARK(bm_depth_lower_bound);

void bm_optimal_incidence_angle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(risfso::geometry::optimal_incidence_angle(
        0.05, 1.2, risfso::deg_to_rad(5.0), risfso::deg_to_rad(85.0)));
  }
}
BENCHMARK(bm_optimal_incidence_angle);

void bm_evaluate_link(benchmark::State& state) {
  const risfso::linkbudget::Scenario scenario;
  for (auto _ : state) {
    benchmark::DoNotOptimize(risfso::linkbudget::evaluate_link(scenario));
  }
}
BENCHMARK(bm_evaluate_link);

void bm_sweep_distance_ratio(benchmark::State& state) {
  risfso::sweep::SweepSpec spec;
  spec.variable = risfso::sweep::SweepVariable::distance_ratio;
  spec.range = {1.0, 100.0, static_cast<int>(state.range(0))};
  spec.transmittances = {0.8, 1.0, 2.0, 5.0, 10.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(risfso::sweep::run(spec));
  }
}
BENCHMARK(bm_sweep_distance_ratio)->Arg(50)->Arg(199);

} // namespace

BENCHMARK_MAIN();
