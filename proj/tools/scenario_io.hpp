// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

#include "risfso/linkbudget.hpp"

namespace risfso::cli {

/// Parses a JSON scenario document. Every key is optional and falls back to
/// the reference scenario; unknown keys and out-of-range values are rejected
/// with the key named in the message. External units: nm, mrad, degrees, mm.
linkbudget::Scenario parse_scenario(const std::string& json_text);

/// Reads and parses a scenario file.
linkbudget::Scenario load_scenario(const std::filesystem::path& path);

/// Serializes a scenario so that parse_scenario(serialize_scenario(s)) == s,
/// including the unit conversions at the boundary.
std::string serialize_scenario(const linkbudget::Scenario& scenario);

} // namespace risfso::cli
