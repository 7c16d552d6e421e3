// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace vqgo {

/// Slowly varying device parameters: offsets from their calibrated values.
struct DriftState {
  std::vector<double> frequency;   ///< qubit frequency offsets (rad/s)
  std::vector<double> coupling;    ///< relative coupling changes (dimensionless)
  std::vector<double> line_phase;  ///< drive-line phase offsets (rad)

  static DriftState zero(int qubits, int couplings, int lines);
  int size() const;
};

/// Independent Gaussian random walks, one step per tick.
struct DriftProcess {
  double frequency_step = 0.0;   ///< rad/s per tick
  double coupling_step = 0.0;    ///< per tick
  double line_phase_step = 0.0;  ///< rad per tick
  double tick = 0.0;             ///< wall-clock duration of one tick (s)
  std::uint64_t seed = 0;

  bool frozen() const { return frequency_step == 0.0 && coupling_step == 0.0 && line_phase_step == 0.0; }
};

/// Advances `state` over ticks [first_tick, first_tick + ticks). Each (parameter, tick)
/// increment is drawn from its own seeded stream, so splitting an interval into
/// consecutive calls gives the same result as one call.
DriftState drift_step(const DriftState& state, const DriftProcess& drift, long ticks, long first_tick = 0);

}  // namespace vqgo
