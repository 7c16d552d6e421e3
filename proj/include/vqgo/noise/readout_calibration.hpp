// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "vqgo/noise/readout.hpp"

namespace vqgo {

/// Process fidelity of the identity channel measured by exact full tomography under `readout`.
double identity_tomography_fidelity(int n, const ReadoutModel& readout);

/// Symmetric readout error whose identity-gate tomography fidelity on n qubits equals `target`.
/// Bisection on p in [0, 0.5); raises a calibration error when the target is out of reach.
ReadoutModel calibrate_readout_to_baseline(double target, int n, double tolerance = 1e-6);

}  // namespace vqgo
