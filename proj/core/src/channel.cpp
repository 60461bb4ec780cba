// SPDX-License-Identifier: Apache-2.0
#include "risfso/channel.hpp"

#include <cmath>
#include <numbers>

#include "risfso/errors.hpp"

namespace risfso::channel {

void LossBreakdown::add_db(std::string id, double db) {
  components_.push_back({std::move(id), db_to_transmittance(db), db});
}

void LossBreakdown::add_transmittance(std::string id, double transmittance) {
  if (!(transmittance >= 0.0)) {
    throw DomainError("component transmittance must be >= 0: " + id);
  }
  components_.push_back({std::move(id), transmittance,
                         transmittance_to_db(transmittance)});
}

double LossBreakdown::total_transmittance() const {
  double product = 1.0;
  for (const LossComponent& c : components_) {
    product *= c.transmittance;
  }
  return product;
}

double LossBreakdown::total_db() const {
  double sum = 0.0;
  for (const LossComponent& c : components_) {
    sum += c.db;
  }
  return sum;
}

double db_to_transmittance(double db) {
  return std::pow(10.0, -db / 10.0);
}

double transmittance_to_db(double transmittance) {
  return -10.0 * std::log10(transmittance);
}

double beer_lambert_transmittance(double kappa_db_per_km, double distance_m) {
  if (!(kappa_db_per_km >= 0.0)) {
    throw DomainError("attenuation coefficient must be >= 0");
  }
  if (!(distance_m >= 0.0)) {
    throw DomainError("distance must be >= 0");
  }
  return db_to_transmittance(kappa_db_per_km * distance_m / 1000.0);
}

double geometric_transmittance(double pd_diameter_m, double divergence_rad,
                               double s_ris_distance_m, double ris_d_distance_m,
                               double incidence_rad, DivergenceMode mode) {
  if (!(pd_diameter_m > 0.0)) {
    throw DomainError("photodetector diameter must be > 0");
  }
  if (!(divergence_rad > 0.0)) {
    throw DomainError("beam divergence must be > 0");
  }
  if (!(s_ris_distance_m >= 0.0 && ris_d_distance_m >= 0.0)) {
    throw DomainError("sub-link distances must be >= 0");
  }
  double beam_diameter = 0.0;
  switch (mode) {
  case DivergenceMode::total_distance:
    beam_diameter = divergence_rad * (s_ris_distance_m + ris_d_distance_m);
    break;
  case DivergenceMode::virtual_origin:
    beam_diameter = divergence_rad * (s_ris_distance_m +
                                      std::cos(incidence_rad) * ris_d_distance_m);
    break;
  }
  if (beam_diameter <= pd_diameter_m) {
    return 1.0;
  }
  const double ratio = pd_diameter_m / beam_diameter;
  return ratio * ratio;
}

double scintillation_margin_db(double cn2_m23, double wavelength_m,
                               double distance_m) {
  if (!(cn2_m23 >= 0.0)) {
    throw DomainError("turbulence structure constant must be >= 0");
  }
  if (!(wavelength_m > 0.0)) {
    throw DomainError("wavelength must be > 0");
  }
  if (!(distance_m >= 0.0)) {
    throw DomainError("distance must be >= 0");
  }
  if (cn2_m23 == 0.0 || distance_m == 0.0) {
    return 0.0;
  }
  const double wavenumber = 2.0 * std::numbers::pi / wavelength_m;
  const double rytov_variance = 1.23 * cn2_m23 *
                                std::pow(wavenumber, 7.0 / 6.0) *
                                std::pow(distance_m, 11.0 / 6.0);
  return 4.343 * std::sqrt(rytov_variance);
}

double rain_attenuation_db(double rate_mm_per_h, double distance_m) {
  if (!(rate_mm_per_h >= 0.0)) {
    throw DomainError("rain rate must be >= 0");
  }
  if (!(distance_m >= 0.0)) {
    throw DomainError("distance must be >= 0");
  }
  if (rate_mm_per_h == 0.0) {
    return 0.0;
  }
  return 1.076 * std::pow(rate_mm_per_h, 0.67) * (distance_m / 1000.0);
}

double fog_attenuation_db(double visibility_km, double wavelength_m,
                          double distance_m) {
  if (!(visibility_km > 0.0)) {
    throw DomainError("visibility must be > 0");
  }
  if (!(wavelength_m > 0.0)) {
    throw DomainError("wavelength must be > 0");
  }
  if (!(distance_m >= 0.0)) {
    throw DomainError("distance must be >= 0");
  }
  // Size-distribution exponent; the V = 1 boundary belongs to the
  // 0.16 V + 0.34 branch.
  double q = 0.0;
  if (visibility_km > 6.0) {
    q = 1.6;
  } else if (visibility_km > 1.0) {
    q = 1.3;
  } else if (visibility_km > 0.5) {
    q = 0.16 * visibility_km + 0.34;
  } else if (visibility_km > 0.3) {
    q = visibility_km - 0.5;
  }
  const double wavelength_nm = wavelength_m * 1.0e9;
  const double beta_db_per_km =
      (3.91 / visibility_km) * std::pow(wavelength_nm / 550.0, -q);
  return beta_db_per_km * (distance_m / 1000.0);
}

double pointing_loss_db(double configured_db) {
  if (!(configured_db >= 0.0)) {
    throw DomainError("pointing loss must be >= 0");
  }
  return configured_db;
}

LossBreakdown compose(
    const std::vector<std::pair<std::string, double>>& components_db) {
  LossBreakdown breakdown;
  for (const auto& [id, db] : components_db) {
    if (!(db >= 0.0)) {
      throw DomainError("loss component must be >= 0 dB: " + id);
    }
    breakdown.add_db(id, db);
  }
  return breakdown;
}

} // namespace risfso::channel
