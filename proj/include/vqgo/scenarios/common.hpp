// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vqgo/bayesopt/trace.hpp"
#include "vqgo/device/floquet.hpp"
#include "vqgo/noise/readout.hpp"
#include "vqgo/scenarios/calibration.hpp"
#include "vqgo/scenarios/config.hpp"
#include "vqgo/tomography/process_matrix.hpp"

namespace vqgo {

/// Everything a gate scenario produces.
struct GateRun {
  ScenarioKind scenario = ScenarioKind::zx_gate;
  std::vector<CalibrationResult> calibrations;
  std::vector<std::pair<std::string, OptimizationTrace>> traces;  ///< per optimization stage
  std::vector<std::string> parameter_names;
  std::vector<double> parameters;  ///< final pulse parameters
  CMatrix target;
  CMatrix gate;
  ProcessMatrix chi;               ///< final process tomography, readout and shots included
  double fidelity = 0.0;           ///< of `chi` against the target
  double exact_fidelity = 0.0;     ///< of the noiseless gate against the target
  ReadoutModel readout;
  std::map<std::string, double> summary;
  std::map<std::string, FloquetPopulations> populations;  ///< named |+++>/|---> time series
};

struct RunHooks {
  std::function<void(const std::string& stage, const std::vector<std::string>& names, const TraceRecord&)> on_record;
  std::function<void(const std::string& message)> log;
};

/// |tr(target^dagger u)|^2 / d^2.
double unitary_fidelity(const CMatrix& u, const CMatrix& target);

/// Readout of the scenario's noise block on n qubits; a baseline is calibrated on its own qubit count.
ReadoutModel scenario_readout(const ScenarioConfig& c, int n);

/// Reduced-chi overlap of u with target from |+0> state tomography. The standard
/// error propagates binomial shot noise through the linear reconstruction.
Estimate reduced_overlap_estimate(const CMatrix& u, const CMatrix& target, const ReadoutModel& readout, int shots,
                                  std::uint64_t seed);

/// Figure of merit of u against target as the scenario measures it.
Estimate measure_figure_of_merit(FigureOfMerit f, const CMatrix& u, const CMatrix& target, const ReadoutModel& readout,
                                 const TomographyConfig& t, std::uint64_t seed);

/// Full process tomography of u under readout error and shot noise.
ProcessMatrix gate_tomography(const CMatrix& u, const ReadoutModel& readout, int shots, std::uint64_t seed);

/// Fills chi, fidelity and exact_fidelity of a run whose gate and target are set.
void finish_gate_run(GateRun& run, int shots, std::uint64_t seed);

}  // namespace vqgo
