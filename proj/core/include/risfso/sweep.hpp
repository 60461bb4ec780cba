// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "risfso/linkbudget.hpp"

namespace risfso::sweep {

enum class SweepVariable { distance_ratio, incidence_angle, s_ris_distance };

/// Inclusive linear grid: start + i * (stop - start) / (steps - 1).
struct SweepRange {
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;
};

struct SweepSpec {
  SweepVariable variable = SweepVariable::distance_ratio;
  SweepRange range;
  std::vector<double> transmittances;
  linkbudget::Scenario base;
};

struct Column {
  std::string label;
  std::vector<double> values;
};

/// One family of curves over a common abscissa grid, tagged with the digest
/// of the scenario it was derived from.
struct CurveSeries {
  std::string variable_label;
  std::vector<double> grid;
  std::vector<Column> columns;
  std::string scenario_digest;
};

std::vector<double> linear_grid(const SweepRange& range);

/// Spectral efficiency vs the sub-link distance ratio r; the first sub-link
/// length is held at the scenario value and the second is set to L1 / r.
CurveSeries sweep_distance_ratio(const SweepSpec& spec);

/// Spectral efficiency and module depth vs incidence angle (degrees).
/// The spectral efficiency columns respond to the angle only in
/// virtual-origin divergence mode; in total-distance mode they are constant.
CurveSeries sweep_incidence_angle(const SweepSpec& spec);

/// Energy efficiency and module depth vs the first sub-link length; the
/// second sub-link is held at the scenario value. The depth column ties the
/// characteristic length proportionally to the swept distance.
CurveSeries sweep_sris_distance(const SweepSpec& spec);

/// Dispatches on spec.variable.
CurveSeries run(const SweepSpec& spec);

/// Spectral efficiency in the limit of a vanishing second sub-link; every
/// distance-ratio sweep value approaches this from below.
double asymptotic_bound(const linkbudget::Scenario& scenario,
                        double transmittance);

/// Smallest grid ratio r = k * grid_step whose spectral efficiency reaches
/// (1 - epsilon) of the asymptotic bound.
double plateau_ratio(const linkbudget::Scenario& scenario, double transmittance,
                     double epsilon, double grid_step, double max_ratio = 1000.0);

/// Proportionality constant tying the module characteristic length to the
/// swept first sub-link distance in sweep_sris_distance.
inline constexpr double kCharLengthPerSrisMeter = 5.0e-5;

} // namespace risfso::sweep
