// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "vqgo/core/types.hpp"

namespace vqgo::units {

/// Angular frequency in rad/s for a value given in MHz.
constexpr double mhz(double f) { return kTwoPi * 1e6 * f; }
constexpr double ghz(double f) { return kTwoPi * 1e9 * f; }
/// MHz for an angular frequency in rad/s.
constexpr double to_mhz(double w) { return w / (kTwoPi * 1e6); }

constexpr double ns(double t) { return 1e-9 * t; }
constexpr double us(double t) { return 1e-6 * t; }

}  // namespace vqgo::units
