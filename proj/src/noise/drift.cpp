// SPDX-License-Identifier: Apache-2.0
#include "vqgo/noise/drift.hpp"

#include <cmath>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/rng.hpp"
#include "vqgo/core/types.hpp"

namespace vqgo {
namespace {

double unit_normal(std::uint64_t seed, std::uint64_t param, std::uint64_t tick) {
  const std::uint64_t h = derive_seed(seed, {param, tick});
  // Box-Muller from two 53-bit uniforms; u1 lies in (0, 1].
  const double u1 = (static_cast<double>(h >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(splitmix64(h) >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

void walk(std::vector<double>& v, double step, std::uint64_t seed, std::uint64_t group, long ticks, long first) {
  if (step == 0.0) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (long t = first; t < first + ticks; ++t)
      v[i] += step * unit_normal(seed, (group << 32) | i, static_cast<std::uint64_t>(t));
}

}  // namespace

DriftState DriftState::zero(int qubits, int couplings, int lines) {
  require(qubits >= 0 && couplings >= 0 && lines >= 0, "DriftState: negative size");
  return {std::vector<double>(static_cast<std::size_t>(qubits), 0.0),
          std::vector<double>(static_cast<std::size_t>(couplings), 0.0),
          std::vector<double>(static_cast<std::size_t>(lines), 0.0)};
}

int DriftState::size() const { return static_cast<int>(frequency.size() + coupling.size() + line_phase.size()); }

DriftState drift_step(const DriftState& state, const DriftProcess& drift, long ticks, long first_tick) {
  require(ticks >= 0 && first_tick >= 0, "drift_step: ticks must be non-negative");
  DriftState out = state;
  walk(out.frequency, drift.frequency_step, drift.seed, 1, ticks, first_tick);
  walk(out.coupling, drift.coupling_step, drift.seed, 2, ticks, first_tick);
  walk(out.line_phase, drift.line_phase_step, drift.seed, 3, ticks, first_tick);
  return out;
}

}  // namespace vqgo
