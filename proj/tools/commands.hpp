// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "risfso/sweep.hpp"

namespace risfso::cli {

/// Module geometry for the scenario plus the depth-optimal incidence angle
/// over the [5, 85] degree search window. "key = value" lines.
std::string geometry_report(const linkbudget::Scenario& scenario);

/// End-to-end link evaluation; with include_breakdown, one line per loss
/// stage (linear transmittance and dB).
std::string link_report(const linkbudget::Scenario& scenario,
                        bool include_breakdown);

sweep::SweepVariable parse_sweep_variable(const std::string& name);

/// "start:stop:steps".
sweep::SweepRange parse_range(const std::string& text);

/// Comma-separated numbers.
std::vector<double> parse_transmittances(const std::string& text);

channel::DivergenceMode parse_divergence_mode(const std::string& name);

} // namespace risfso::cli
