// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vqgo/device/floquet.hpp"
#include "vqgo/device/qubit_model.hpp"
#include "vqgo/device/transmon.hpp"
#include "vqgo/noise/distortion.hpp"
#include "vqgo/noise/drift.hpp"
#include "vqgo/noise/readout.hpp"

namespace vqgo {

enum class ScenarioKind {
  phase_calibration,
  omega_c_calibration,
  zx_gate,
  zx1_1yz_gate,
  floquet_zyz,
  identity_baseline,
  drift_study,
};

enum class FigureOfMerit { reduced_chi, zero_fidelity, exact };

std::string_view scenario_name(ScenarioKind k) noexcept;
ScenarioKind parse_scenario(std::string_view name);
std::string_view figure_of_merit_name(FigureOfMerit f) noexcept;
FigureOfMerit parse_figure_of_merit(std::string_view name);

/// Frequencies in the file are MHz (cyclic); the accessors convert to rad/s.
struct QubitDeviceConfig {
  std::vector<double> freq_mhz;
  std::vector<double> coupling_mhz;
  QubitModel model() const;
};

struct TransmonDeviceConfig {
  std::vector<double> omega_h_mhz{5544.0, 5323.0, 5486.0};
  std::vector<double> epsilon{0.209, 0.218, 0.212};
  std::vector<double> coupling_mhz{1.955, 2.052};
  int levels = 4;
  int global_truncation = 64;
  int fock_dim = 24;
  DeviceModel model() const;
};

struct PulseConfig {
  double duration_ns = 400.0;
  double sample_period_ns = 1.0;
  int ramp_samples = 10;
  double cr_max_mhz = 60.0;     ///< CR amplitude at d = 1
  double drive_max_mhz = 1.0;   ///< resonant correction amplitude at d = 1
  int prescan_points = 16;
  double calibration_amplitude = 0.6;  ///< CR envelope used for phase calibration
  int calibration_budget = 12;
};

struct ReadoutConfig {
  /// Identity-gate process fidelity to calibrate against (on `baseline_qubits` qubits); unset: use `p`.
  std::optional<double> baseline;
  int baseline_qubits = 2;
  double p = 0.0;
};

struct DriftConfig {
  double frequency_step_khz = 0.0;
  double coupling_step = 0.0;
  double line_phase_step = 0.0;  ///< rad per tick
  double tick_s = 432.0;
  DriftProcess process(std::uint64_t seed) const;
};

struct DistortionConfig {
  std::map<std::string, LineError> lines;
  double kappa = 0.0;
  double threshold_mhz = 0.0;
  LineDistortion model() const;
};

struct NoiseConfig {
  ReadoutConfig readout;
  DistortionConfig distortion;
  DriftConfig drift;
  bool drift_enabled = false;
};

struct OptimizerConfig {
  int budget = 200;
  double design_fraction = 0.25;
  int stage1_budget = 60;
  int stage2_budget = 40;
};

struct TomographyConfig {
  int shots = 10000;        ///< per setting; 0 = exact expectations
  int zf_samples = 200;
  int zf_shots = 1024;
};

struct FloquetConfig {
  std::vector<double> weights_mhz{0.080, 2.170, 2.491};
  double omega_mhz = 1.0;
  int periods = 3;
  double c_zx_mhz = 0.2;
  double c_xz_mhz = 0.2;
  double c_x1_mhz = 0.136;
  double c_x3_mhz = 0.104;
  double zz12_mhz = 0.017;
  double zz23_mhz = 0.013;
  double omega_c_mhz = 0.48;
  std::vector<double> lower_mhz{-0.5, 1.0, 1.0, 0.0};  ///< bounds on (Omega_0, Omega_1, Omega_2, Omega_c)
  std::vector<double> upper_mhz{0.5, 3.5, 3.5, 1.0};
  double resolution_ns = 10.0;
  bool full_tier = false;
  double omega1_mhz = 18.24;
  double omega3_mhz = 19.76;
  double device_omega_c_mhz = 0.466;
  FloquetQubitTier tier() const;
  FloquetDrive drive() const;
};

struct DriftStudyConfig {
  long ticks = 67;
  int shots = 1024;
  double zx_angle = 0.25 * 3.141592653589793;  ///< Rabi angle of the static control gate
};

struct OmegaCConfig {
  double omega1_mhz = 18.24;
  double omega3_mhz = 19.76;
  double target_zx_mhz = 0.2;
  double upper_mhz = 1.0;  ///< bisection bracket per side is [0, upper]
  int points = 5;
  double interval_ns = 20.0;
  double dt_ps = 4.0;
};

struct ScenarioConfig {
  ScenarioKind scenario = ScenarioKind::zx_gate;
  std::uint64_t seed = 1;
  FigureOfMerit figure_of_merit = FigureOfMerit::reduced_chi;
  QubitDeviceConfig device;
  TransmonDeviceConfig transmon;
  PulseConfig pulse;
  NoiseConfig noise;
  OptimizerConfig optimizer;
  TomographyConfig tomography;
  FloquetConfig floquet;
  DriftStudyConfig drift_study;
  OmegaCConfig omega_c;

  void validate() const;
};

/// Scenario defaults, including the device and figure of merit the scenario expects.
ScenarioConfig default_config(ScenarioKind k);
/// Parses YAML on top of the defaults of its `scenario` key. Raises configuration errors.
ScenarioConfig parse_config(const std::string& yaml);
ScenarioConfig load_config(const std::string& path);
/// Complete YAML of the effective configuration; parse_config(dump_config(c)) reproduces c exactly.
std::string dump_config(const ScenarioConfig& c);

}  // namespace vqgo
