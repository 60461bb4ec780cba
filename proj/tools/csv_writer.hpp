// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

#include "risfso/sweep.hpp"

namespace risfso::cli {

/// Renders a curve series as CSV: header `<variable>,<label>,...`, one row
/// per grid point, scientific notation with 9 fraction digits, '.' decimal
/// separator, '\n' line endings, no trailing whitespace. Deterministic.
std::string format_csv(const sweep::CurveSeries& series);

/// Writes format_csv(series) atomically (temp file then rename); no partial
/// or stale file is left behind on any error path.
void write_csv(const sweep::CurveSeries& series,
               const std::filesystem::path& path);

} // namespace risfso::cli
