// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>

#include "risfso/errors.hpp"
#include "risfso/geometry.hpp"
#include "risfso/units.hpp"

namespace risfso::cli {

namespace {

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.10g", value);
  return buffer;
}

void append_line(std::string& text, const char* key, double value) {
  text += key;
  text += " = ";
  text += format_number(value);
  text += '\n';
}

double parse_number(const std::string& text, const char* what) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || text.empty() || errno == ERANGE) {
    throw ConfigError(std::string("cannot parse ") + what + ": '" + text + "'");
  }
  return value;
}

} // namespace

std::string geometry_report(const linkbudget::Scenario& scenario) {
  const geometry::RisGeometry g = geometry::derive_geometry(
      scenario.beam, scenario.ris.refractive_index,
      scenario.ris.characteristic_length_m);
  const geometry::DepthOptimum optimum = geometry::optimal_incidence_angle(
      scenario.ris.characteristic_length_m, scenario.ris.refractive_index,
      deg_to_rad(5.0), deg_to_rad(85.0));

  std::string text;
  append_line(text, "incidence_angle_deg",
              rad_to_deg(scenario.beam.incidence_angle_rad));
  append_line(text, "refractive_index", g.refractive_index);
  append_line(text, "characteristic_length_m", g.characteristic_length_m);
  append_line(text, "refraction_angle_deg", rad_to_deg(g.refraction_angle_rad));
  append_line(text, "retardation_angle_deg",
              rad_to_deg(g.retardation_angle_rad));
  append_line(text, "spot_diameter_m", g.spot_diameter_m);
  append_line(text, "width_m", g.width_m);
  append_line(text, "length_m", g.length_m);
  append_line(text, "depth_m", g.depth_m);
  append_line(text, "virtual_divergence_mrad",
              1.0e3 * geometry::virtual_divergence(
                          scenario.beam.divergence_rad,
                          scenario.beam.incidence_angle_rad));
  append_line(text, "optimal_incidence_angle_deg",
              rad_to_deg(optimum.incidence_angle_rad));
  append_line(text, "optimal_depth_m", optimum.depth_m);
  return text;
}

std::string link_report(const linkbudget::Scenario& scenario,
                        bool include_breakdown) {
  const linkbudget::LinkResult result = linkbudget::evaluate_link(scenario);

  std::string text;
  append_line(text, "received_power_w", result.received_power_w);
  append_line(text, "ris_emerged_power_w", result.ris_emerged_power_w);
  append_line(text, "snr", result.snr);
  append_line(text, "spectral_efficiency_bits_per_s_per_hz",
              result.spectral_efficiency);
  append_line(text, "energy_efficiency_bits_per_s_per_hz_per_w",
              result.energy_efficiency);
  append_line(text, "total_transmittance",
              result.breakdown.total_transmittance());
  append_line(text, "total_loss_db", result.breakdown.total_db());
  text += "scenario_digest = " + linkbudget::scenario_digest(scenario) + "\n";
  if (include_breakdown) {
    text += "breakdown:\n";
    for (const channel::LossComponent& c : result.breakdown.components()) {
      text += "  " + c.id + ": transmittance = " + format_number(c.transmittance) +
              ", loss_db = " + format_number(c.db) + "\n";
    }
  }
  return text;
}

sweep::SweepVariable parse_sweep_variable(const std::string& name) {
  if (name == "distance_ratio") {
    return sweep::SweepVariable::distance_ratio;
  }
  if (name == "incidence_angle") {
    return sweep::SweepVariable::incidence_angle;
  }
  if (name == "s_ris_distance") {
    return sweep::SweepVariable::s_ris_distance;
  }
  throw ConfigError("unknown sweep variable: " + name +
                    " (expected distance_ratio, incidence_angle or "
                    "s_ris_distance)");
}

sweep::SweepRange parse_range(const std::string& text) {
  const std::size_t first = text.find(':');
  const std::size_t second =
      first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    throw ConfigError("range must have the form start:stop:steps, got '" +
                      text + "'");
  }
  sweep::SweepRange range;
  range.start = parse_number(text.substr(0, first), "range start");
  range.stop = parse_number(text.substr(first + 1, second - first - 1),
                            "range stop");
  const double steps = parse_number(text.substr(second + 1), "range steps");
  range.steps = static_cast<int>(steps);
  if (static_cast<double>(range.steps) != steps) {
    throw ConfigError("range steps must be an integer, got '" + text + "'");
  }
  return range;
}

std::vector<double> parse_transmittances(const std::string& text) {
  std::vector<double> values;
  std::size_t begin = 0;
  while (true) {
    const std::size_t comma = text.find(',', begin);
    const std::string item = text.substr(begin, comma - begin);
    values.push_back(parse_number(item, "transmittance"));
    if (comma == std::string::npos) {
      break;
    }
    begin = comma + 1;
  }
  return values;
}

channel::DivergenceMode parse_divergence_mode(const std::string& name) {
  if (name == "total_distance") {
    return channel::DivergenceMode::total_distance;
  }
  if (name == "virtual") {
    return channel::DivergenceMode::virtual_origin;
  }
  throw ConfigError("unknown divergence mode: " + name +
                    " (expected total_distance or virtual)");
}

} // namespace risfso::cli
