// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "vqgo/device/full_model.hpp"
#include "vqgo/device/qubit_model.hpp"
#include "vqgo/noise/distortion.hpp"
#include "vqgo/scenarios/config.hpp"

namespace vqgo {

struct CalibrationResult {
  std::string name;
  std::map<std::string, double> values;
  std::map<std::string, double> residuals;
  bool ok = true;
  long evaluations = 0;  ///< model evaluations consumed; the run's logical clock
  std::string message;
};

nlohmann::json to_json(const CalibrationResult& r);

/// Cross-resonance drive of `control` at the frequency of `target` on the qubit model.
struct CrSetup {
  QubitModel model;
  int control = 0;
  int target = 1;
  std::string channel = "cr";  ///< CR channel name; distortion entries are keyed by it
  double duration = 400e-9;
  double sample_period = 1e-9;
  int ramp_samples = 10;
  double cr_max = 0.0;     ///< rad/s at d1 = 1
  double drive_max = 0.0;  ///< rad/s at |d2| = 1
  LineDistortion distortion;
};

CrSetup cr_setup(const ScenarioConfig& c, int control, int target);

struct CrParams {
  double d1 = 0.0;     ///< CR envelope
  double d2x = 0.0;    ///< resonant X correction on the target
  double d2y = 0.0;    ///< resonant Y correction on the target
  double vz = 0.0;     ///< virtual Z on the control (rad)
  double phase = 0.0;  ///< CR channel phase
};

/// Program with the CR channel (+ "target" when a correction is present) with distortion applied.
/// Software frames follow the dressed qubit frequencies.
PulseProgram cr_program(const CrSetup& s, const CrParams& p);
CMatrix cr_gate(const CrSetup& s, const CrParams& p);

/// P(target in |->) after the CR pulse on |+> (control) |+> (target), other qubits in |0>.
double phase_calibration_cost(const CrSetup& s, double envelope, double phase);

struct PhaseCalibrationOptions {
  double envelope = 0.6;
  int budget = 12;
  double max_residual = 0.05;
  std::uint64_t seed = 0;
};

/// Envelope and budget from the pulse block of the config.
PhaseCalibrationOptions phase_calibration_options(const ScenarioConfig& c, std::uint64_t seed);

/// One-dimensional BO over the CR phase in [-pi/2, pi/2] followed by a Brent polish.
/// values: "phase"; residuals: "cost".
CalibrationResult calibrate_phase(const CrSetup& s, const PhaseCalibrationOptions& opt);

/// Central-qubit Rabi rates of one side of the three-transmon device.
struct SideRates {
  double c_1x = 0.0;  ///< 1X1 with the compensation included
  double c_zx = 0.0;  ///< ZX1 or 1XZ
  double r0 = 0.0, r1 = 0.0;
  double residual = 0.0;
};

/// side = 0 drives Q1, side = 2 drives Q3, each at the central qubit frequency,
/// with a compensating -X drive of physical amplitude omega_c on Q2.
SideRates side_rates(const FullModel& m, int side, double amplitude, double omega_c, const OmegaCConfig& c);

/// Per-side bisection on the compensation so that |r0| = |r1| within 1%, then
/// amplitude updates until |c_ZX1| = |c_1XZ| = target within 2%.
/// values: omega_c (sum), omega_c1, omega_c3, omega1, omega3 (all MHz).
CalibrationResult calibrate_omega_c(const FullModel& m, const OmegaCConfig& c);

}  // namespace vqgo
