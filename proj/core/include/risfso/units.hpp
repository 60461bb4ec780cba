// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numbers>

namespace risfso {

// All quantities inside the library are SI (metres, radians, watts, hertz).
// Degrees, millimetres, millirads and nanometres exist only at the interface
// of tools that talk to humans; these helpers are the single conversion point.

constexpr double deg_to_rad(double degrees) {
  return degrees * (std::numbers::pi / 180.0);
}

constexpr double rad_to_deg(double radians) {
  return radians * (180.0 / std::numbers::pi);
}

} // namespace risfso
