// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "vqgo/bayesopt/search_space.hpp"
#include "vqgo/device/floquet.hpp"
#include "vqgo/noise/drift.hpp"
#include "vqgo/scenarios/common.hpp"

namespace vqgo {

/// Drift offsets as seen by the Floquet tier; the coupling scale is one plus the mean relative coupling change.
FloquetDrift floquet_drift(const DriftState& s);

/// Drift state of the scenario's device after `ticks` ticks; zero when drift is disabled.
DriftState scenario_drift(const ScenarioConfig& c, long ticks);

/// (Omega_0, Omega_1, Omega_2, Omega_c) in MHz within the configured bounds.
SearchSpace floquet_search_space(const FloquetConfig& f);

/// Tier with the drive weights and compensation of x (MHz) under `drift`.
FloquetQubitTier floquet_tier_at(const FloquetConfig& f, const RVector& x, const FloquetDrift& drift = {});

/// Target after the configured number of periods: exp(-i 2 pi periods / 25 ZYZ).
CMatrix floquet_target(const FloquetConfig& f);

/// Populations on the full transmon chain with the configured weights and drive amplitudes.
struct FloquetFullTier {
  FloquetPopulations populations;
  double c_zii = 0.0;   ///< Stark rates removed as software frames (rad/s)
  double c_iiz = 0.0;
  double max_leakage = 0.0;
  CMatrix gate;         ///< computational block after all periods, frame removed
};

/// The static ZII and IIZ rates are read off the first period and removed as virtual-Z frames.
FloquetFullTier floquet_full_tier(const ScenarioConfig& c, double resolution);

/// BO of the drive weights and compensation against the zero-fidelity of the target,
/// drift advancing one tick per evaluation when enabled, then process tomography.
/// Populations: "table" (configured weights, qubit tier), "final" (recommended point),
/// "table_full" when the full tier is enabled.
GateRun run_floquet_scenario(const ScenarioConfig& c, const RunHooks& hooks = {});

}  // namespace vqgo
