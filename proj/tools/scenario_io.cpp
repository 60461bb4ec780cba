// SPDX-License-Identifier: Apache-2.0
#include "scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "risfso/errors.hpp"
#include "risfso/units.hpp"

namespace risfso::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

double require_number(const json& value, const std::string& key) {
  if (!value.is_number()) {
    throw ConfigError("configuration key expects a number: " + key);
  }
  return value.get<double>();
}

std::string require_string(const json& value, const std::string& key) {
  if (!value.is_string()) {
    throw ConfigError("configuration key expects a string: " + key);
  }
  return value.get<std::string>();
}

[[noreturn]] void out_of_range(const std::string& key, const char* constraint) {
  throw ConfigError("configuration key " + key + " must be " + constraint);
}

/// Finds an external-unit value that converts back to exactly the internal
/// one, so serializing and re-parsing cannot drift.
template <typename ToInternal>
double invertible_external(double internal, double nominal_external,
                           ToInternal to_internal) {
  if (to_internal(nominal_external) == internal) {
    return nominal_external;
  }
  double lo = nominal_external;
  double hi = nominal_external;
  for (int i = 0; i < 4; ++i) {
    lo = std::nextafter(lo, -std::numeric_limits<double>::infinity());
    if (to_internal(lo) == internal) {
      return lo;
    }
    hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
    if (to_internal(hi) == internal) {
      return hi;
    }
  }
  return nominal_external;
}

} // namespace

linkbudget::Scenario parse_scenario(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid scenario document: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("scenario document must be a JSON object");
  }

  linkbudget::Scenario s;
  for (const auto& [key, value] : doc.items()) {
    if (key == "wavelength_nm") {
      const double v = require_number(value, key);
      if (!(v > 0.0)) out_of_range(key, "> 0");
      s.wavelength_m = v / 1.0e9;
    } else if (key == "transmit_power_w") {
      const double v = require_number(value, key);
      if (!(v > 0.0)) out_of_range(key, "> 0");
      s.beam.transmit_power_w = v;
    } else if (key == "beam_divergence_mrad") {
      const double v = require_number(value, key);
      if (!(v > 0.0)) out_of_range(key, "> 0");
      s.beam.divergence_rad = v / 1.0e3;
    } else if (key == "incidence_angle_deg") {
      const double v = require_number(value, key);
      if (!(v >= 0.0 && v < 90.0)) out_of_range(key, "in [0, 90)");
      s.beam.incidence_angle_rad = deg_to_rad(v);
    } else if (key == "s_ris_distance_m") {
      const double v = require_number(value, key);
      if (!(v >= 0.0)) out_of_range(key, ">= 0");
      s.beam.s_ris_distance_m = v;
    } else if (key == "ris_d_distance_m") {
      const double v = require_number(value, key);
      if (!(v >= 0.0)) out_of_range(key, ">= 0");
      s.ris_d_distance_m = v;
    } else if (key == "refractive_index") {
      const double v = require_number(value, key);
      if (!(v >= 1.0)) out_of_range(key, ">= 1");
      s.ris.refractive_index = v;
    } else if (key == "characteristic_length_m") {
      const double v = require_number(value, key);
      if (!(v > 0.0)) out_of_range(key, "> 0");
      s.ris.characteristic_length_m = v;
    } else if (key == "ris_transmittance") {
      const double v = require_number(value, key);
      if (!(v >= 0.0)) out_of_range(key, ">= 0");
      s.ris.transmittance = v;
    } else if (key == "glass_efficiency") {
      const double v = require_number(value, key);
      if (!(v > 0.0 && v <= 1.0)) out_of_range(key, "in (0, 1]");
      s.ris.glass_efficiency = v;
    } else if (key == "amplifier_noise_figure_db") {
      const double v = require_number(value, key);
      if (!(v >= 0.0)) out_of_range(key, ">= 0");
      s.ris.amplifier_noise_figure_db = v;
    } else if (key == "tx_efficiency") {
      const double v = require_number(value, key);
      if (!(v > 0.0 && v <= 1.0)) out_of_range(key, "in (0, 1]");
      s.tx_efficiency = v;
    } else if (key == "rx_efficiency") {
      const double v = require_number(value, key);
      if (!(v > 0.0 && v <= 1.0)) out_of_range(key, "in (0, 1]");
      s.rx_efficiency = v;
    } else if (key == "pd_diameter_mm") {
      const double v = require_number(value, key);
      if (!(v > 0.0)) out_of_range(key, "> 0");
      s.pd_diameter_m = v / 1.0e3;
    } else if (key == "attenuation_db_per_km") {
      const double v = require_number(value, key);
      if (!(v >= 0.0)) out_of_range(key, ">= 0");
      s.atmosphere.attenuation_db_per_km = v;
    } else if (key == "cn2_m23") {
      const double v = require_number(value, key);
      if (!(v >= 0.0)) out_of_range(key, ">= 0");
      s.atmosphere.cn2_m23 = v;
    } else if (key == "rain_rate_mm_per_h") {
      const double v = require_number(value, key);
      if (!(v >= 0.0)) out_of_range(key, ">= 0");
      s.atmosphere.rain_rate_mm_per_h = v;
    } else if (key == "visibility_km") {
      const double v = require_number(value, key);
      if (!(v > 0.0)) out_of_range(key, "> 0");
      s.atmosphere.visibility_km = v;
    } else if (key == "pointing_loss_db") {
      const double v = require_number(value, key);
      if (!(v >= 0.0)) out_of_range(key, ">= 0");
      s.atmosphere.pointing_loss_db = v;
    } else if (key == "bandwidth_hz") {
      const double v = require_number(value, key);
      if (!(v > 0.0)) out_of_range(key, "> 0");
      s.bandwidth_hz = v;
    } else if (key == "responsivity_a_per_w") {
      const double v = require_number(value, key);
      if (!(v >= 0.0)) out_of_range(key, ">= 0");
      s.responsivity_a_per_w = v;
    } else if (key == "noise_psd_a2_per_hz") {
      const double v = require_number(value, key);
      if (!(v > 0.0)) out_of_range(key, "> 0");
      s.noise_psd_a2_per_hz = v;
    } else if (key == "total_power_w") {
      const double v = require_number(value, key);
      if (!(v > 0.0)) out_of_range(key, "> 0");
      s.total_power_w = v;
    } else if (key == "divergence_mode") {
      const std::string mode = require_string(value, key);
      if (mode == "total_distance") {
        s.divergence_mode = channel::DivergenceMode::total_distance;
      } else if (mode == "virtual") {
        s.divergence_mode = channel::DivergenceMode::virtual_origin;
      } else {
        out_of_range(key, "\"total_distance\" or \"virtual\"");
      }
    } else {
      throw ConfigError("unknown configuration key: " + key);
    }
  }
  return s;
}

linkbudget::Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot read configuration file: " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) {
    throw ConfigError("cannot read configuration file: " + path.string());
  }
  return parse_scenario(text.str());
}

std::string serialize_scenario(const linkbudget::Scenario& s) {
  ordered_json doc;
  doc["wavelength_nm"] = invertible_external(
      s.wavelength_m, s.wavelength_m * 1.0e9,
      [](double v) { return v / 1.0e9; });
  doc["transmit_power_w"] = s.beam.transmit_power_w;
  doc["beam_divergence_mrad"] = invertible_external(
      s.beam.divergence_rad, s.beam.divergence_rad * 1.0e3,
      [](double v) { return v / 1.0e3; });
  doc["incidence_angle_deg"] = invertible_external(
      s.beam.incidence_angle_rad, rad_to_deg(s.beam.incidence_angle_rad),
      [](double v) { return deg_to_rad(v); });
  doc["s_ris_distance_m"] = s.beam.s_ris_distance_m;
  doc["ris_d_distance_m"] = s.ris_d_distance_m;
  doc["refractive_index"] = s.ris.refractive_index;
  doc["characteristic_length_m"] = s.ris.characteristic_length_m;
  doc["ris_transmittance"] = s.ris.transmittance;
  doc["glass_efficiency"] = s.ris.glass_efficiency;
  doc["amplifier_noise_figure_db"] = s.ris.amplifier_noise_figure_db;
  doc["tx_efficiency"] = s.tx_efficiency;
  doc["rx_efficiency"] = s.rx_efficiency;
  doc["pd_diameter_mm"] = invertible_external(
      s.pd_diameter_m, s.pd_diameter_m * 1.0e3,
      [](double v) { return v / 1.0e3; });
  doc["attenuation_db_per_km"] = s.atmosphere.attenuation_db_per_km;
  if (s.atmosphere.cn2_m23) {
    doc["cn2_m23"] = *s.atmosphere.cn2_m23;
  }
  if (s.atmosphere.rain_rate_mm_per_h) {
    doc["rain_rate_mm_per_h"] = *s.atmosphere.rain_rate_mm_per_h;
  }
  if (s.atmosphere.visibility_km) {
    doc["visibility_km"] = *s.atmosphere.visibility_km;
  }
  doc["pointing_loss_db"] = s.atmosphere.pointing_loss_db;
  doc["bandwidth_hz"] = s.bandwidth_hz;
  doc["responsivity_a_per_w"] = s.responsivity_a_per_w;
  doc["noise_psd_a2_per_hz"] = s.noise_psd_a2_per_hz;
  doc["total_power_w"] = s.total_power_w;
  doc["divergence_mode"] =
      s.divergence_mode == channel::DivergenceMode::total_distance
          ? "total_distance"
          : "virtual";
  return doc.dump(2) + "\n";
}

} // namespace risfso::cli
