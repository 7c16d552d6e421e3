// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>

#include "vqgo/device/pulse.hpp"

namespace vqgo {

struct LineError {
  double phase = 0.0;  ///< static phase offset (rad)
  double scale = 1.0;  ///< amplitude scale
};

/// Transfer errors of the drive lines, keyed by channel name. Channels not
/// listed pass through unchanged apart from the low-amplitude phase bend.
struct LineDistortion {
  std::map<std::string, LineError> lines;
  double kappa = 0.0;      ///< rad per unit of (1 - A / threshold)
  double threshold = 0.0;  ///< rad/s; the bend is active for peak amplitudes A below it

  bool is_identity() const;
  void validate() const;
};

/// Peak physical amplitude Omega * max |d| of a channel (rad/s).
double peak_amplitude(const DriveChannel& ch);

/// phase -> phase + offset + kappa * max(0, 1 - A / threshold), amplitude -> scale * amplitude.
PulseProgram apply_distortion(const PulseProgram& prog, const LineDistortion& d);

}  // namespace vqgo
