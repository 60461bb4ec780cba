// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>

#include "risfso/channel.hpp"
#include "risfso/geometry.hpp"

namespace risfso::linkbudget {

/// Amplifying liquid-crystal surface between the two sub-links.
/// transmittance > 1 means the pumped cavity amplifies.
struct RisDevice {
  double transmittance = 0.8;
  double glass_efficiency = 0.95; // per glass-substrate crossing
  double refractive_index = 1.2;
  double characteristic_length_m = 0.05;
  double amplifier_noise_figure_db = 0.0; // applied only when transmittance > 1

  bool operator==(const RisDevice&) const = default;
};

/// Complete end-to-end link description. Defaults form the reference
/// scenario used throughout the tests: 780 nm, 0.3 W, 1 mrad, 51 degrees,
/// two 1 km sub-links at 2.6 dB/km, 2.5 mm photodetector.
struct Scenario {
  double wavelength_m = 780e-9;
  geometry::IncidentBeam beam;
  RisDevice ris;
  double ris_d_distance_m = 1000.0;
  double pd_diameter_m = 2.5e-3;
  double tx_efficiency = 0.95;
  double rx_efficiency = 0.95;
  channel::AtmosphericParams atmosphere;
  double bandwidth_hz = 1.0e9;
  double responsivity_a_per_w = 0.5;
  double noise_psd_a2_per_hz = 1.0e-27;
  double total_power_w = 0.4838; // consumed power for energy efficiency
  channel::DivergenceMode divergence_mode = channel::DivergenceMode::total_distance;

  bool operator==(const Scenario&) const = default;
};

struct LinkResult {
  double received_power_w = 0.0;
  double ris_emerged_power_w = 0.0;
  double snr = 0.0;
  double spectral_efficiency = 0.0; // bits/s/Hz
  double energy_efficiency = 0.0;   // bits/s/Hz/W
  channel::LossBreakdown breakdown;
};

/// Power emerging from the surface: glass_efficiency^2 * transmittance * p_in
/// (one substrate crossing in, one out).
double ris_output_power(double p_in_w, double transmittance,
                        double glass_efficiency);

/// Received power at the photodetector with every multiplicative stage
/// recorded in the breakdown, in propagation order.
std::pair<double, channel::LossBreakdown> received_power(const Scenario& scenario);

/// Direct-detection square law over flat additive noise:
/// (responsivity * power)^2 / (noise_psd * bandwidth * 10^(nf/10)).
double snr(double received_power_w, double responsivity_a_per_w,
           double noise_psd_a2_per_hz, double bandwidth_hz,
           double noise_figure_db);

double spectral_efficiency(double snr);

double energy_efficiency(double spectral_efficiency, double total_power_w);

/// Full chain: received power, SNR, spectral and energy efficiency.
LinkResult evaluate_link(const Scenario& scenario);

/// Stable 16-hex-digit fingerprint of every scenario field, for tagging
/// outputs derived from the same inputs.
std::string scenario_digest(const Scenario& scenario);

} // namespace risfso::linkbudget
