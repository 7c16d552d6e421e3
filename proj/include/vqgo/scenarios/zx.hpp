// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "vqgo/bayesopt/search_space.hpp"
#include "vqgo/scenarios/calibration.hpp"
#include "vqgo/scenarios/common.hpp"

namespace vqgo {

/// Rabi angle of the ZX term against the CR envelope.
struct ZxPrescan {
  std::vector<double> amplitude;
  std::vector<double> c_zx;   ///< rad/s
  std::vector<double> angle;  ///< |c_ZX| times the pulse area per unit envelope
  double bound = 1.0;         ///< first envelope reaching a Rabi angle of pi/2, or 1
  double sign = 1.0;          ///< sign of c_ZX at the calibrated phase
};

ZxPrescan zx_prescan(const CrSetup& s, double phase, int points);

/// (d1, d2x, vz) with d1 in [0, bound], d2x in [-1, 1], vz in [-pi, pi].
SearchSpace zx_search_space(double d1_bound);

/// exp(-i sign pi/4 ZX).
CMatrix zx_target(double sign);

/// Phase calibration, prescan, BO of (d1, d2x, vz) and final process tomography.
GateRun run_zx_scenario(const ScenarioConfig& c, const RunHooks& hooks = {});

}  // namespace vqgo
