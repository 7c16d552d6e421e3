// SPDX-License-Identifier: Apache-2.0
#include "vqgo/scenarios/identity.hpp"

#include "vqgo/core/rng.hpp"
#include "vqgo/noise/readout_calibration.hpp"

namespace vqgo {

IdentityBaseline run_identity_baseline(const ScenarioConfig& c, const RunHooks& hooks) {
  c.validate();
  IdentityBaseline r;
  r.readout = scenario_readout(c, 3);
  r.p = r.readout.flip01(0);
  const ReadoutModel two = r.readout.is_ideal() ? ReadoutModel::ideal() : ReadoutModel::symmetric(2, r.p);
  r.fidelity2 = identity_tomography_fidelity(2, two);
  r.fidelity3 = identity_tomography_fidelity(3, r.readout);
  r.chi2 = gate_tomography(CMatrix::Identity(4, 4), two, c.tomography.shots, derive_seed(c.seed, {7, 2}));
  r.chi3 = gate_tomography(CMatrix::Identity(8, 8), r.readout, c.tomography.shots, derive_seed(c.seed, {7, 3}));
  r.sampled_fidelity2 = process_fidelity(r.chi2, chi_from_unitary(CMatrix::Identity(4, 4)));
  r.sampled_fidelity3 = process_fidelity(r.chi3, chi_from_unitary(CMatrix::Identity(8, 8)));
  if (hooks.log)
    hooks.log("identity fidelity: 2 qubits " + std::to_string(r.fidelity2) + ", 3 qubits " + std::to_string(r.fidelity3));
  return r;
}

}  // namespace vqgo
