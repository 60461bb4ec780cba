// SPDX-License-Identifier: Apache-2.0
#include "risfso/sweep.hpp"

#include <cmath>
#include <cstdio>

#include "risfso/errors.hpp"
#include "risfso/geometry.hpp"
#include "risfso/units.hpp"

namespace risfso::sweep {

namespace {

std::string transmittance_label(double transmittance) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "T=%g", transmittance);
  return buffer;
}

void check_transmittances(const std::vector<double>& transmittances) {
  if (transmittances.empty()) {
    throw DomainError("transmittance list must not be empty");
  }
  for (double t : transmittances) {
    if (!(t >= 0.0)) {
      throw DomainError("swept transmittance must be >= 0");
    }
  }
}

} // namespace

std::vector<double> linear_grid(const SweepRange& range) {
  if (!(range.steps >= 2)) {
    throw DomainError("sweep grid needs at least 2 steps");
  }
  if (!(range.start < range.stop)) {
    throw DomainError("sweep grid needs start < stop");
  }
  std::vector<double> grid(static_cast<std::size_t>(range.steps));
  const double span = range.stop - range.start;
  for (int i = 0; i < range.steps; ++i) {
    grid[static_cast<std::size_t>(i)] =
        range.start + i * span / (range.steps - 1);
  }
  return grid;
}

CurveSeries sweep_distance_ratio(const SweepSpec& spec) {
  check_transmittances(spec.transmittances);
  const std::vector<double> grid = linear_grid(spec.range);
  if (!(grid.front() > 0.0)) {
    throw DomainError("distance ratio grid must be positive");
  }

  CurveSeries series;
  series.variable_label = "distance_ratio";
  series.grid = grid;
  series.scenario_digest = linkbudget::scenario_digest(spec.base);
  for (double t : spec.transmittances) {
    Column column;
    column.label = transmittance_label(t);
    column.values.reserve(grid.size());
    for (double ratio : grid) {
      linkbudget::Scenario point = spec.base;
      point.ris.transmittance = t;
      point.ris_d_distance_m = point.beam.s_ris_distance_m / ratio;
      column.values.push_back(
          linkbudget::evaluate_link(point).spectral_efficiency);
    }
    series.columns.push_back(std::move(column));
  }
  return series;
}

CurveSeries sweep_incidence_angle(const SweepSpec& spec) {
  check_transmittances(spec.transmittances);
  const std::vector<double> grid = linear_grid(spec.range);
  if (!(grid.front() > 0.0 && grid.back() < 90.0)) {
    throw DomainError("incidence angle grid must stay inside (0, 90) degrees");
  }

  CurveSeries series;
  series.variable_label = "incidence_angle_deg";
  series.grid = grid;
  series.scenario_digest = linkbudget::scenario_digest(spec.base);
  for (double t : spec.transmittances) {
    Column column;
    column.label = transmittance_label(t);
    column.values.reserve(grid.size());
    for (double angle_deg : grid) {
      linkbudget::Scenario point = spec.base;
      point.ris.transmittance = t;
      point.beam.incidence_angle_rad = deg_to_rad(angle_deg);
      column.values.push_back(
          linkbudget::evaluate_link(point).spectral_efficiency);
    }
    series.columns.push_back(std::move(column));
  }

  Column depth;
  depth.label = "depth_m";
  depth.values.reserve(grid.size());
  for (double angle_deg : grid) {
    depth.values.push_back(geometry::depth_lower_bound(
        spec.base.ris.characteristic_length_m, deg_to_rad(angle_deg),
        spec.base.ris.refractive_index));
  }
  series.columns.push_back(std::move(depth));
  return series;
}

CurveSeries sweep_sris_distance(const SweepSpec& spec) {
  check_transmittances(spec.transmittances);
  const std::vector<double> grid = linear_grid(spec.range);
  if (!(grid.front() >= 0.0)) {
    throw DomainError("distance grid must be >= 0");
  }

  CurveSeries series;
  series.variable_label = "s_ris_distance_m";
  series.grid = grid;
  series.scenario_digest = linkbudget::scenario_digest(spec.base);
  for (double t : spec.transmittances) {
    Column column;
    column.label = transmittance_label(t);
    column.values.reserve(grid.size());
    for (double distance_m : grid) {
      linkbudget::Scenario point = spec.base;
      point.ris.transmittance = t;
      point.beam.s_ris_distance_m = distance_m;
      column.values.push_back(
          linkbudget::evaluate_link(point).energy_efficiency);
    }
    series.columns.push_back(std::move(column));
  }

  // Depth column with the characteristic length tied proportionally to the
  // swept distance; exactly linear, and zero at the degenerate origin.
  Column depth;
  depth.label = "depth_m";
  depth.values.reserve(grid.size());
  for (double distance_m : grid) {
    if (distance_m == 0.0) {
      depth.values.push_back(0.0);
    } else {
      depth.values.push_back(geometry::depth_lower_bound(
          kCharLengthPerSrisMeter * distance_m,
          spec.base.beam.incidence_angle_rad,
          spec.base.ris.refractive_index));
    }
  }
  series.columns.push_back(std::move(depth));
  return series;
}

CurveSeries run(const SweepSpec& spec) {
  switch (spec.variable) {
  case SweepVariable::distance_ratio:
    return sweep_distance_ratio(spec);
  case SweepVariable::incidence_angle:
    return sweep_incidence_angle(spec);
  case SweepVariable::s_ris_distance:
    return sweep_sris_distance(spec);
  }
  throw DomainError("unknown sweep variable");
}

double asymptotic_bound(const linkbudget::Scenario& scenario,
                        double transmittance) {
  linkbudget::Scenario limit = scenario;
  limit.ris.transmittance = transmittance;
  limit.ris_d_distance_m = 0.0;
  return linkbudget::evaluate_link(limit).spectral_efficiency;
}

double plateau_ratio(const linkbudget::Scenario& scenario, double transmittance,
                     double epsilon, double grid_step, double max_ratio) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw DomainError("plateau tolerance must lie in (0, 1)");
  }
  if (!(grid_step > 0.0)) {
    throw DomainError("plateau grid step must be > 0");
  }
  const double bound = asymptotic_bound(scenario, transmittance);
  const double target = (1.0 - epsilon) * bound;
  for (int k = 1;; ++k) {
    const double ratio = k * grid_step;
    if (ratio > max_ratio) {
      throw DomainError("plateau not reached within the maximum ratio");
    }
    linkbudget::Scenario point = scenario;
    point.ris.transmittance = transmittance;
    point.ris_d_distance_m = point.beam.s_ris_distance_m / ratio;
    if (linkbudget::evaluate_link(point).spectral_efficiency >= target) {
      return ratio;
    }
  }
}

} // namespace risfso::sweep
