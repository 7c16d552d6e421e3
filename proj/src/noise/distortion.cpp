// SPDX-License-Identifier: Apache-2.0
#include "vqgo/noise/distortion.hpp"

#include <algorithm>
#include <cmath>

#include "vqgo/core/errors.hpp"

namespace vqgo {

bool LineDistortion::is_identity() const {
  if (kappa != 0.0) return false;
  return std::all_of(lines.begin(), lines.end(),
                     [](const auto& kv) { return kv.second.phase == 0.0 && kv.second.scale == 1.0; });
}

void LineDistortion::validate() const {
  for (const auto& [name, e] : lines) require(e.scale > 0.0, "LineDistortion: scale for " + name + " must be positive");
  require(threshold >= 0.0, "LineDistortion: negative threshold");
  require(kappa == 0.0 || threshold > 0.0, "LineDistortion: kappa needs a positive threshold");
}

double peak_amplitude(const DriveChannel& ch) {
  double m = 0.0;
  for (std::size_t k = 0; k < ch.dx.size(); ++k) m = std::max(m, std::hypot(ch.dx[k], ch.dy[k]));
  return ch.amplitude * m;
}

PulseProgram apply_distortion(const PulseProgram& prog, const LineDistortion& d) {
  d.validate();
  PulseProgram out = prog;
  if (d.is_identity()) return out;
  for (auto& ch : out.channels) {
    if (auto it = d.lines.find(ch.name); it != d.lines.end()) {
      ch.phase += it->second.phase;
      ch.amplitude *= it->second.scale;
    }
    if (d.kappa != 0.0) ch.phase += d.kappa * std::max(0.0, 1.0 - peak_amplitude(ch) / d.threshold);
  }
  return out;
}

}  // namespace vqgo
