// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace risfso::channel {

/// How the beam diameter at the receiver is modelled: either the transmitter
/// divergence acts over the full path length, or the redirecting surface
/// re-emits as a virtual source with a compressed divergence over the second
/// sub-link. ("virtual" is spelled out because it is a C++ keyword.)
enum class DivergenceMode { total_distance, virtual_origin };

/// Per-sub-link atmospheric description. Optional effects are disabled when
/// the corresponding field is absent.
struct AtmosphericParams {
  double attenuation_db_per_km = 2.6;   // Beer-Lambert aggregate
  std::optional<double> cn2_m23;        // turbulence structure constant
  std::optional<double> rain_rate_mm_per_h;
  std::optional<double> visibility_km;  // fog
  double pointing_loss_db = 0.0;        // fixed miss-alignment penalty

  bool operator==(const AtmosphericParams&) const = default;
};

struct LossComponent {
  std::string id;
  double transmittance = 1.0;
  double db = 0.0;
};

/// Ordered multiplicative chain of link stages. Passive stages have
/// transmittance in (0, 1] and db >= 0; an amplifying stage may carry
/// transmittance > 1 and negative db.
class LossBreakdown {
public:
  void add_db(std::string id, double db);
  void add_transmittance(std::string id, double transmittance);

  [[nodiscard]] double total_transmittance() const;
  [[nodiscard]] double total_db() const;
  [[nodiscard]] const std::vector<LossComponent>& components() const {
    return components_;
  }

private:
  std::vector<LossComponent> components_;
};

double db_to_transmittance(double db);
double transmittance_to_db(double transmittance);

/// Exponential power decay over distance: 10^(-kappa * d_km / 10).
double beer_lambert_transmittance(double kappa_db_per_km, double distance_m);

/// Fraction of the diverging beam captured by the photodetector aperture,
/// min(1, (pd_diameter / d_r)^2) with the beam diameter d_r at the receiver
/// chosen by the divergence mode.
double geometric_transmittance(double pd_diameter_m, double divergence_rad,
                               double s_ris_distance_m, double ris_d_distance_m,
                               double incidence_rad, DivergenceMode mode);

/// Turbulence fade margin from the plane-wave Rytov variance
/// sigma^2 = 1.23 * cn2 * (2*pi/lambda)^(7/6) * L^(11/6).
double scintillation_margin_db(double cn2_m23, double wavelength_m,
                               double distance_m);

/// Rain attenuation 1.076 * R^0.67 dB/km scaled by distance.
double rain_attenuation_db(double rate_mm_per_h, double distance_m);

/// Fog attenuation from visibility, (3.91 / V) * (lambda_nm / 550)^(-q) dB/km
/// with the piecewise size-distribution exponent q(V).
double fog_attenuation_db(double visibility_km, double wavelength_m,
                          double distance_m);

/// Fixed configured miss-alignment penalty; validates and passes through.
double pointing_loss_db(double configured_db);

/// Builds a LossBreakdown from (id, dB) pairs of passive losses.
LossBreakdown compose(
    const std::vector<std::pair<std::string, double>>& components_db);

} // namespace risfso::channel
