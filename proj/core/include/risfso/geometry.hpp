// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "risfso/units.hpp"

namespace risfso::geometry {

/// Diverging beam as it arrives at the redirecting surface.
struct IncidentBeam {
  double transmit_power_w = 0.3;
  double divergence_rad = 1.0e-3; // full transmitter divergence angle
  double s_ris_distance_m = 1000.0;
  double incidence_angle_rad = deg_to_rad(51.0);

  bool operator==(const IncidentBeam&) const = default;
};

/// Mechanical envelope of one liquid-crystal module, derived from the beam.
struct RisGeometry {
  double refractive_index = 1.2;
  double characteristic_length_m = 0.05;
  double refraction_angle_rad = 0.0;
  double retardation_angle_rad = 0.0;
  double spot_diameter_m = 0.0;
  double depth_m = 0.0;
  double width_m = 0.0;  // = spot_diameter_m
  double length_m = 0.0; // = 3 * spot_diameter_m

  bool operator==(const RisGeometry&) const = default;
};

/// Internal propagation angle for light entering a medium of the given
/// refractive index from free space (Snell's law, air index 1).
double refraction_angle(double incidence_rad, double refractive_index);

/// Angle by which the internal ray lags the incident direction,
/// incidence minus refraction.
double retardation_angle(double incidence_rad, double refractive_index);

/// Footprint of the beam on a surface tilted by the incidence angle:
/// divergence * distance stretched by 1 / cos(incidence).
double spot_diameter(double divergence_rad, double s_ris_distance_m,
                     double incidence_rad);

/// Smallest module depth that keeps the retarded internal ray clear of the
/// active region: l_char / (2 * tan(refraction) * cos(incidence)).
double depth_lower_bound(double characteristic_length_m, double incidence_rad,
                         double refractive_index);

struct ModuleDimensions {
  double width_m = 0.0;
  double length_m = 0.0;
  double depth_m = 0.0;
};

/// Width covers one spot diameter, length covers three along the stretched
/// axis; depth passes through unchanged.
ModuleDimensions module_dimensions(double spot_diameter_m, double depth_m);

struct DepthOptimum {
  double incidence_angle_rad = 0.0;
  double depth_m = 0.0;
};

/// Incidence angle minimising depth_lower_bound over [lo, hi], located with a
/// golden section search to 0.01 degree resolution.
DepthOptimum optimal_incidence_angle(double characteristic_length_m,
                                     double refractive_index,
                                     double interval_lo_rad,
                                     double interval_hi_rad);

/// Effective divergence of the beam re-emitted towards the receiver when the
/// tilted surface acts as a virtual source: divergence * cos(incidence).
double virtual_divergence(double divergence_rad, double incidence_rad);

/// Full mechanical envelope for a beam hitting a module with the given
/// refractive index and characteristic active length.
RisGeometry derive_geometry(const IncidentBeam& beam, double refractive_index,
                            double characteristic_length_m);

} // namespace risfso::geometry
