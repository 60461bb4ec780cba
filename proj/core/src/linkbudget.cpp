// SPDX-License-Identifier: Apache-2.0
#include "risfso/linkbudget.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

#include "risfso/errors.hpp"

namespace risfso::linkbudget {

namespace {

void check_scenario(const Scenario& s) {
  if (!(s.wavelength_m > 0.0)) {
    throw DomainError("wavelength must be > 0");
  }
  if (!(s.beam.transmit_power_w > 0.0)) {
    throw DomainError("transmit power must be > 0");
  }
  if (!(s.tx_efficiency > 0.0 && s.tx_efficiency <= 1.0)) {
    throw DomainError("transmitter efficiency must lie in (0, 1]");
  }
  if (!(s.rx_efficiency > 0.0 && s.rx_efficiency <= 1.0)) {
    throw DomainError("receiver efficiency must lie in (0, 1]");
  }
  if (!(s.ris.transmittance >= 0.0)) {
    throw DomainError("surface transmittance must be >= 0");
  }
  if (!(s.ris.glass_efficiency > 0.0 && s.ris.glass_efficiency <= 1.0)) {
    throw DomainError("glass efficiency must lie in (0, 1]");
  }
  if (!(s.ris_d_distance_m >= 0.0)) {
    throw DomainError("surface-to-receiver distance must be >= 0");
  }
}

/// Appends the atmospheric stages of one sub-link: Beer-Lambert always,
/// the optional effects only when configured.
void append_sublink(channel::LossBreakdown& bd, const Scenario& s,
                    double distance_m, const std::string& suffix) {
  const channel::AtmosphericParams& atm = s.atmosphere;
  bd.add_transmittance(
      "atmosphere" + suffix,
      channel::beer_lambert_transmittance(atm.attenuation_db_per_km, distance_m));
  if (atm.cn2_m23) {
    bd.add_db("scintillation" + suffix,
              channel::scintillation_margin_db(*atm.cn2_m23, s.wavelength_m,
                                               distance_m));
  }
  if (atm.rain_rate_mm_per_h) {
    bd.add_db("rain" + suffix,
              channel::rain_attenuation_db(*atm.rain_rate_mm_per_h, distance_m));
  }
  if (atm.visibility_km) {
    bd.add_db("fog" + suffix,
              channel::fog_attenuation_db(*atm.visibility_km, s.wavelength_m,
                                          distance_m));
  }
  if (atm.pointing_loss_db != 0.0) {
    bd.add_db("pointing" + suffix,
              channel::pointing_loss_db(atm.pointing_loss_db));
  }
}

} // namespace

double ris_output_power(double p_in_w, double transmittance,
                        double glass_efficiency) {
  if (!(p_in_w >= 0.0)) {
    throw DomainError("input power must be >= 0");
  }
  if (!(transmittance >= 0.0)) {
    throw DomainError("surface transmittance must be >= 0");
  }
  if (!(glass_efficiency > 0.0 && glass_efficiency <= 1.0)) {
    throw DomainError("glass efficiency must lie in (0, 1]");
  }
  return glass_efficiency * glass_efficiency * transmittance * p_in_w;
}

std::pair<double, channel::LossBreakdown> received_power(const Scenario& s) {
  check_scenario(s);

  channel::LossBreakdown bd;
  bd.add_transmittance("tx_efficiency", s.tx_efficiency);
  append_sublink(bd, s, s.beam.s_ris_distance_m, "_s_ris");
  bd.add_transmittance("ris", s.ris.glass_efficiency * s.ris.glass_efficiency *
                                  s.ris.transmittance);
  append_sublink(bd, s, s.ris_d_distance_m, "_ris_d");
  bd.add_transmittance(
      "geometric",
      channel::geometric_transmittance(s.pd_diameter_m, s.beam.divergence_rad,
                                       s.beam.s_ris_distance_m,
                                       s.ris_d_distance_m,
                                       s.beam.incidence_angle_rad,
                                       s.divergence_mode));
  bd.add_transmittance("rx_efficiency", s.rx_efficiency);

  double power = s.beam.transmit_power_w;
  for (const channel::LossComponent& c : bd.components()) {
    power *= c.transmittance;
  }
  return {power, bd};
}

double snr(double received_power_w, double responsivity_a_per_w,
           double noise_psd_a2_per_hz, double bandwidth_hz,
           double noise_figure_db) {
  if (!(received_power_w >= 0.0)) {
    throw DomainError("received power must be >= 0");
  }
  if (!(responsivity_a_per_w >= 0.0)) {
    throw DomainError("responsivity must be >= 0");
  }
  if (!(noise_figure_db >= 0.0)) {
    throw DomainError("noise figure must be >= 0");
  }
  const double noise_power = noise_psd_a2_per_hz * bandwidth_hz *
                             std::pow(10.0, noise_figure_db / 10.0);
  if (!(noise_power > 0.0)) {
    throw DomainError("noise power must be > 0");
  }
  const double photocurrent = responsivity_a_per_w * received_power_w;
  return photocurrent * photocurrent / noise_power;
}

double spectral_efficiency(double snr) {
  if (!(snr >= 0.0)) {
    throw DomainError("signal-to-noise ratio must be >= 0");
  }
  return std::log2(1.0 + snr);
}

double energy_efficiency(double spectral_efficiency, double total_power_w) {
  if (!(total_power_w > 0.0)) {
    throw DomainError("total consumed power must be > 0");
  }
  if (!(spectral_efficiency >= 0.0)) {
    throw DomainError("spectral efficiency must be >= 0");
  }
  return spectral_efficiency / total_power_w;
}

LinkResult evaluate_link(const Scenario& s) {
  LinkResult result;
  auto [power, bd] = received_power(s);
  result.received_power_w = power;

  double emerged = s.beam.transmit_power_w;
  for (const channel::LossComponent& c : bd.components()) {
    emerged *= c.transmittance;
    if (c.id == "ris") {
      break;
    }
  }
  result.ris_emerged_power_w = emerged;

  // The amplifier contributes excess noise only when it actually amplifies.
  const double noise_figure_db =
      s.ris.transmittance > 1.0 ? s.ris.amplifier_noise_figure_db : 0.0;
  result.snr = snr(power, s.responsivity_a_per_w, s.noise_psd_a2_per_hz,
                   s.bandwidth_hz, noise_figure_db);
  result.spectral_efficiency = spectral_efficiency(result.snr);
  result.energy_efficiency =
      energy_efficiency(result.spectral_efficiency, s.total_power_w);
  result.breakdown = std::move(bd);
  return result;
}

namespace {

void digest_bytes(std::uint64_t& hash, const char* text) {
  for (const char* p = text; *p != '\0'; ++p) {
    hash ^= static_cast<unsigned char>(*p);
    hash *= 1099511628211ULL;
  }
}

void digest_field(std::uint64_t& hash, const char* tag, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%s=%.17g;", tag, value);
  digest_bytes(hash, buffer);
}

void digest_optional(std::uint64_t& hash, const char* tag,
                     const std::optional<double>& value) {
  if (value) {
    digest_field(hash, tag, *value);
  } else {
    char buffer[48];
    std::snprintf(buffer, sizeof buffer, "%s=off;", tag);
    digest_bytes(hash, buffer);
  }
}

} // namespace

std::string scenario_digest(const Scenario& s) {
  std::uint64_t hash = 1469598103934665603ULL; // FNV-1a offset basis
  digest_field(hash, "wavelength", s.wavelength_m);
  digest_field(hash, "transmit_power", s.beam.transmit_power_w);
  digest_field(hash, "divergence", s.beam.divergence_rad);
  digest_field(hash, "s_ris_distance", s.beam.s_ris_distance_m);
  digest_field(hash, "incidence_angle", s.beam.incidence_angle_rad);
  digest_field(hash, "transmittance", s.ris.transmittance);
  digest_field(hash, "glass_efficiency", s.ris.glass_efficiency);
  digest_field(hash, "refractive_index", s.ris.refractive_index);
  digest_field(hash, "characteristic_length", s.ris.characteristic_length_m);
  digest_field(hash, "noise_figure", s.ris.amplifier_noise_figure_db);
  digest_field(hash, "ris_d_distance", s.ris_d_distance_m);
  digest_field(hash, "pd_diameter", s.pd_diameter_m);
  digest_field(hash, "tx_efficiency", s.tx_efficiency);
  digest_field(hash, "rx_efficiency", s.rx_efficiency);
  digest_field(hash, "attenuation", s.atmosphere.attenuation_db_per_km);
  digest_optional(hash, "cn2", s.atmosphere.cn2_m23);
  digest_optional(hash, "rain_rate", s.atmosphere.rain_rate_mm_per_h);
  digest_optional(hash, "visibility", s.atmosphere.visibility_km);
  digest_field(hash, "pointing_loss", s.atmosphere.pointing_loss_db);
  digest_field(hash, "bandwidth", s.bandwidth_hz);
  digest_field(hash, "responsivity", s.responsivity_a_per_w);
  digest_field(hash, "noise_psd", s.noise_psd_a2_per_hz);
  digest_field(hash, "total_power", s.total_power_w);
  digest_bytes(hash, s.divergence_mode == channel::DivergenceMode::total_distance
                         ? "mode=total_distance;"
                         : "mode=virtual;");
  char out[17];
  std::snprintf(out, sizeof out, "%016llx",
                static_cast<unsigned long long>(hash));
  return out;
}

} // namespace risfso::linkbudget
