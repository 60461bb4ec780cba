// SPDX-License-Identifier: Apache-2.0
#include "risfso/geometry.hpp"

#include <cmath>

#include "risfso/errors.hpp"

namespace risfso::geometry {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_incidence(double incidence_rad) {
  if (!(incidence_rad >= 0.0 && incidence_rad < kHalfPi)) {
    throw DomainError("incidence angle must lie in [0, pi/2)");
  }
}

void check_index(double refractive_index) {
  if (!(refractive_index >= 1.0)) {
    throw DomainError("refractive index must be >= 1");
  }
}

} // namespace

double refraction_angle(double incidence_rad, double refractive_index) {
  check_incidence(incidence_rad);
  check_index(refractive_index);
  return std::asin(std::sin(incidence_rad) / refractive_index);
}

double retardation_angle(double incidence_rad, double refractive_index) {
  return incidence_rad - refraction_angle(incidence_rad, refractive_index);
}

double spot_diameter(double divergence_rad, double s_ris_distance_m,
                     double incidence_rad) {
  if (!(divergence_rad > 0.0)) {
    throw DomainError("beam divergence must be > 0");
  }
  if (!(s_ris_distance_m >= 0.0)) {
    throw DomainError("distance to the surface must be >= 0");
  }
  check_incidence(incidence_rad);
  return divergence_rad * s_ris_distance_m / std::cos(incidence_rad);
}

double depth_lower_bound(double characteristic_length_m, double incidence_rad,
                         double refractive_index) {
  if (!(characteristic_length_m > 0.0)) {
    throw DomainError("characteristic length must be > 0");
  }
  if (!(incidence_rad > 0.0 && incidence_rad < kHalfPi)) {
    throw DomainError("no finite depth outside incidence range (0, pi/2)");
  }
  check_index(refractive_index);
  const double alpha = refraction_angle(incidence_rad, refractive_index);
  return characteristic_length_m /
         (2.0 * std::tan(alpha) * std::cos(incidence_rad));
}

ModuleDimensions module_dimensions(double spot_diameter_m, double depth_m) {
  if (!(spot_diameter_m > 0.0)) {
    throw DomainError("spot diameter must be > 0");
  }
  if (!(depth_m > 0.0)) {
    throw DomainError("module depth must be > 0");
  }
  return {spot_diameter_m, 3.0 * spot_diameter_m, depth_m};
}

DepthOptimum optimal_incidence_angle(double characteristic_length_m,
                                     double refractive_index,
                                     double interval_lo_rad,
                                     double interval_hi_rad) {
  if (!(interval_lo_rad > 0.0 && interval_hi_rad < kHalfPi &&
        interval_lo_rad <= interval_hi_rad)) {
    throw DomainError("search interval must be non-empty inside (0, pi/2)");
  }

  const auto depth = [&](double phi) {
    return depth_lower_bound(characteristic_length_m, phi, refractive_index);
  };

  // Golden section search; strict unimodality of the depth curve is a tested
  // property of the bound.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double tol = deg_to_rad(0.01);
  double a = interval_lo_rad;
  double b = interval_hi_rad;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = depth(c);
  double fd = depth(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = depth(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = depth(d);
    }
  }
  const double phi_star = 0.5 * (a + b);
  return {phi_star, depth(phi_star)};
}

double virtual_divergence(double divergence_rad, double incidence_rad) {
  if (!(divergence_rad > 0.0)) {
    throw DomainError("beam divergence must be > 0");
  }
  check_incidence(incidence_rad);
  return divergence_rad * std::cos(incidence_rad);
}

RisGeometry derive_geometry(const IncidentBeam& beam, double refractive_index,
                            double characteristic_length_m) {
  RisGeometry g;
  g.refractive_index = refractive_index;
  g.characteristic_length_m = characteristic_length_m;
  g.refraction_angle_rad =
      refraction_angle(beam.incidence_angle_rad, refractive_index);
  g.retardation_angle_rad = beam.incidence_angle_rad - g.refraction_angle_rad;
  g.spot_diameter_m = spot_diameter(beam.divergence_rad, beam.s_ris_distance_m,
                                    beam.incidence_angle_rad);
  g.depth_m = depth_lower_bound(characteristic_length_m,
                                beam.incidence_angle_rad, refractive_index);
  const ModuleDimensions dims = module_dimensions(g.spot_diameter_m, g.depth_m);
  g.width_m = dims.width_m;
  g.length_m = dims.length_m;
  return g;
}

} // namespace risfso::geometry
