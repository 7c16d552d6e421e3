// SPDX-License-Identifier: Apache-2.0
#include "vqgo/noise/readout_calibration.hpp"

#include "vqgo/core/errors.hpp"
#include "vqgo/tomography/process_tomography.hpp"

namespace vqgo {

double identity_tomography_fidelity(int n, const ReadoutModel& readout) {
  const CMatrix id = CMatrix::Identity(1 << n, 1 << n);
  const auto oracle = unitary_oracle(id, readout);
  return process_fidelity(process_tomography(oracle, n, kExactShots), chi_from_unitary(id));
}

ReadoutModel calibrate_readout_to_baseline(double target, int n, double tolerance) {
  require(target > 0.5 && target <= 1.0, "calibrate_readout_to_baseline: target must lie in (0.5, 1]");
  require(n >= 1, "calibrate_readout_to_baseline: n must be positive");
  if (target >= 1.0) return ReadoutModel::symmetric(n, 0.0);
  double lo = 0.0, hi = 0.49;
  if (identity_tomography_fidelity(n, ReadoutModel::symmetric(n, hi)) > target)
    fail(ErrorCategory::calibration, "calibrate_readout_to_baseline: target below the reachable range");
  for (int it = 0; it < 200 && hi - lo > tolerance; ++it) {
    const double mid = 0.5 * (lo + hi);
    (identity_tomography_fidelity(n, ReadoutModel::symmetric(n, mid)) > target ? lo : hi) = mid;
  }
  const auto model = ReadoutModel::symmetric(n, 0.5 * (lo + hi));
  if (std::abs(identity_tomography_fidelity(n, model) - target) > 0.005)
    fail(ErrorCategory::calibration, "calibrate_readout_to_baseline: did not converge");
  return model;
}

}  // namespace vqgo
