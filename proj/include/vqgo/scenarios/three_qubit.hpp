// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "vqgo/bayesopt/search_space.hpp"
#include "vqgo/scenarios/calibration.hpp"
#include "vqgo/scenarios/common.hpp"

namespace vqgo {

/// Constant-pulse parameters of the simultaneous ZX1 + 1YZ drive on a three-qubit chain.
struct ThreeQubitParams {
  double d1 = 0.0;          ///< CR envelope of Q1 on Q2
  double vz1 = 0.0;         ///< virtual Z on Q1
  double d3 = 0.0;          ///< CR envelope of Q3 on Q2
  double vz3 = 0.0;         ///< virtual Z on Q3
  double central = 0.0;     ///< resonant correction on Q2, fraction of drive_max
  double central_phase = 0.0;
};

struct ThreeQubitSetup {
  CrSetup left;   ///< Q1 -> Q2, channel "cr1"
  CrSetup right;  ///< Q3 -> Q2, channel "cr3"
  double phase1 = 0.0;  ///< CR phase giving c_ZX1 < 0
  double phase3 = 0.0;  ///< CR phase giving c_1YZ < 0
};

ThreeQubitSetup three_qubit_setup(const ScenarioConfig& c);

/// Setup with both CR phases calibrated and the target's sign conventions applied.
/// Appends the phase calibrations and reports the evaluations they consumed.
ThreeQubitSetup calibrate_three_qubit_setup(const ScenarioConfig& c, std::vector<CalibrationResult>* calibrations = nullptr,
                                            long* evaluations = nullptr);

/// Channels "cr1", "cr3" and "central" with distortion applied; software frames track dressed frequencies.
PulseProgram three_qubit_program(const ThreeQubitSetup& s, const ThreeQubitParams& p);
CMatrix three_qubit_gate(const ThreeQubitSetup& s, const ThreeQubitParams& p);

/// exp(i pi/4 (ZX1 + 1YZ)).
CMatrix zx1_1yz_target();
/// exp(i pi/4 ZX1) and exp(i pi/4 1YZ).
CMatrix zx1_block_target();
CMatrix yz_block_target();

/// Pauli labels whose pairwise chi elements are expected to dominate for the target.
const std::array<std::string, 3>& zx1_1yz_dominant_labels();
/// Largest |chi_mn| outside the dominant 3 x 3 block.
double max_nondominant_chi(const ProcessMatrix& p);

/// Stage 1: each two-body block alone with its control's virtual Z. Stage 2: the central
/// correction (amplitude, phase) against the full target. Final process tomography.
GateRun run_zx1_1yz_scenario(const ScenarioConfig& c, const RunHooks& hooks = {});

}  // namespace vqgo
