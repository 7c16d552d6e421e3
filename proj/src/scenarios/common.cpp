// SPDX-License-Identifier: Apache-2.0
#include "vqgo/scenarios/common.hpp"

#include <algorithm>
#include <cmath>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/rng.hpp"
#include "vqgo/noise/readout_calibration.hpp"
#include "vqgo/tomography/oracle.hpp"
#include "vqgo/tomography/process_tomography.hpp"
#include "vqgo/tomography/reduced.hpp"
#include "vqgo/tomography/zero_fidelity.hpp"

namespace vqgo {

double unitary_fidelity(const CMatrix& u, const CMatrix& target) {
  require(u.rows() == target.rows() && u.cols() == target.cols(), "unitary_fidelity: dimension mismatch");
  const double d = static_cast<double>(u.rows());
  return std::norm((target.adjoint() * u).trace()) / (d * d);
}

ReadoutModel scenario_readout(const ScenarioConfig& c, int n) {
  const auto& r = c.noise.readout;
  if (r.baseline) {
    const ReadoutModel base = calibrate_readout_to_baseline(*r.baseline, r.baseline_qubits);
    return ReadoutModel::symmetric(n, base.flip01(0));
  }
  if (r.p > 0.0) return ReadoutModel::symmetric(n, r.p);
  return ReadoutModel::ideal();
}

Estimate reduced_overlap_estimate(const CMatrix& u, const CMatrix& target, const ReadoutModel& readout, int shots,
                                  std::uint64_t seed) {
  require(u.rows() == 4, "reduced_overlap_estimate: two-qubit gates only");
  const MapOracle oracle = unitary_oracle(u, readout, seed);
  const auto data = reduced_process_tomography_data(oracle, shots);
  const ReducedChi tr = reduced_chi_from_unitary(target);
  Estimate e;
  e.value = reduced_overlap(data.chi, tr);
  if (shots > 0) {
    const std::size_t m = data.expectations.size();
    std::vector<double> unit(m, 0.0);
    const double base = reduced_overlap(reduced_chi_from_expectations(unit), tr);
    double var = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      unit[k] = 1.0;
      const double w = reduced_overlap(reduced_chi_from_expectations(unit), tr) - base;
      unit[k] = 0.0;
      const double ek = std::clamp(data.expectations[k], -1.0, 1.0);
      var += w * w * (1.0 - ek * ek) / shots;
    }
    e.std_error = std::sqrt(var);
  }
  return e;
}

Estimate measure_figure_of_merit(FigureOfMerit f, const CMatrix& u, const CMatrix& target, const ReadoutModel& readout,
                                 const TomographyConfig& t, std::uint64_t seed) {
  switch (f) {
    case FigureOfMerit::reduced_chi:
      return reduced_overlap_estimate(u, target, readout, t.shots, seed);
    case FigureOfMerit::zero_fidelity: {
      const auto plan = make_zero_fidelity_plan(target, t.zf_samples, derive_seed(seed, {0}));
      const MapOracle oracle = unitary_oracle(u, readout, derive_seed(seed, {1}));
      return zero_fidelity_estimate(plan, oracle, t.zf_shots);
    }
    case FigureOfMerit::exact:
      break;
  }
  if (readout.is_ideal()) return {unitary_fidelity(u, target), 0.0};
  const ProcessMatrix p = gate_tomography(u, readout, kExactShots, seed);
  return {process_fidelity(p, chi_from_unitary(target)), 0.0};
}

ProcessMatrix gate_tomography(const CMatrix& u, const ReadoutModel& readout, int shots, std::uint64_t seed) {
  const int n = static_cast<int>(std::lround(std::log2(static_cast<double>(u.rows()))));
  const MapOracle oracle = unitary_oracle(u, readout, seed);
  return process_tomography(oracle, n, shots);
}

void finish_gate_run(GateRun& run, int shots, std::uint64_t seed) {
  run.chi = gate_tomography(run.gate, run.readout, shots, seed);
  run.fidelity = process_fidelity(run.chi, chi_from_unitary(run.target));
  run.exact_fidelity = unitary_fidelity(run.gate, run.target);
  run.summary["fidelity"] = run.fidelity;
  run.summary["exact_fidelity"] = run.exact_fidelity;
}

}  // namespace vqgo
