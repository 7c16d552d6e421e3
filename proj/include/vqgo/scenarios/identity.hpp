// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "vqgo/noise/readout.hpp"
#include "vqgo/scenarios/common.hpp"
#include "vqgo/tomography/process_matrix.hpp"

namespace vqgo {

/// Identity-gate process fidelities under the scenario readout, calibrated on
/// `baseline_qubits` qubits and applied to two and three qubits.
struct IdentityBaseline {
  ReadoutModel readout;  ///< per-qubit model (first qubit's rates apply to all)
  double p = 0.0;
  double fidelity2 = 0.0;  ///< exact tomography
  double fidelity3 = 0.0;
  ProcessMatrix chi2;      ///< shot-noise tomography
  ProcessMatrix chi3;
  double sampled_fidelity2 = 0.0;
  double sampled_fidelity3 = 0.0;
};

IdentityBaseline run_identity_baseline(const ScenarioConfig& c, const RunHooks& hooks = {});

}  // namespace vqgo
