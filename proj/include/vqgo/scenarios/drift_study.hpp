// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>

#include "vqgo/device/floquet.hpp"
#include "vqgo/scenarios/common.hpp"
#include "vqgo/tomography/process_matrix.hpp"

namespace vqgo {

/// Two tomography runs of one fixed pulse, `ticks` drift ticks apart.
struct DriftComparison {
  ProcessMatrix before;
  ProcessMatrix after;
  double overlap = 0.0;   ///< Re tr[before after^dagger]
  double max_diff = 0.0;  ///< largest |chi_mn| difference
};

struct DriftStudyResult {
  long ticks = 0;
  DriftComparison floquet;
  DriftComparison static_zx;
  DriftComparison floquet_coupling_only;  ///< same seed with frequency and line-phase drift frozen
  std::map<std::string, double> summary;
};

/// The Floquet tier with the configured weights, under `drift`.
FloquetQubitTier floquet_pulse_tier(const FloquetConfig& f, const FloquetDrift& drift);

/// Constant cross-resonance of Q1 on Q2 alone, compensated on the central line;
/// its duration gives the configured Rabi angle.
FloquetQubitTier static_zx_tier(const FloquetConfig& f, const FloquetDrift& drift);
double static_zx_duration(const FloquetConfig& f, double angle);

/// Compares the two gates at tick 0 and at `drift_study.ticks` under the scenario's drift process.
DriftStudyResult run_drift_study(const ScenarioConfig& c, const RunHooks& hooks = {});

}  // namespace vqgo
