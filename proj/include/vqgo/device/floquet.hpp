// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "vqgo/core/propagate.hpp"
#include "vqgo/device/full_model.hpp"

namespace vqgo {

/// Omega(t) = sum_k weights[k] cos(k omega t) over `periods` periods of 2 pi / omega.
struct FloquetDrive {
  std::vector<double> weights;  ///< rad/s
  double omega = 0.0;           ///< rad/s
  int periods = 1;

  double period() const;
  double duration() const { return periods * period(); }
  double value(double t) const;
  double peak() const;  ///< upper bound on |Omega(t)|: sum of |weights|
  /// Envelope at sample midpoints, one value per sample.
  std::vector<double> samples(double sample_period) const;
};

FloquetDrive make_floquet_drive(const std::vector<double>& weights, double omega, int periods);

/// exp(-i angle ZYZ); the three-period Floquet target uses angle 6 pi / 25.
CMatrix zyz_target(double angle);

/// Slowly varying device parameters seen by the Floquet qubit tier.
struct FloquetDrift {
  std::array<double, 3> detuning{0.0, 0.0, 0.0};  ///< qubit frequency offsets (rad/s)
  std::array<double, 3> line_phase{0.0, 0.0, 0.0};  ///< phase error of each qubit's drive line (rad)
  double coupling_scale = 1.0;
};

/// Rotating-frame effective model of the three-transmon Floquet device:
///   H = c_zx ZX1 + c_xz 1XZ + (c_x1 + c_x3) 1X1 + zz_12 ZZ1 + zz_23 1ZZ
///       - (omega_c / 2) 1X1 - (Omega(t) / 2) 1Y1
/// with the two cross-resonance sides on the lines of Q1 and Q3 and both
/// resonant drives on the line of Q2.
struct FloquetQubitTier {
  double c_zx = 0.0;
  double c_xz = 0.0;
  double c_x1 = 0.0;  ///< 1X1 induced by the Q1 drive
  double c_x3 = 0.0;  ///< 1X1 induced by the Q3 drive
  double zz_12 = 0.0;
  double zz_23 = 0.0;
  double omega_c = 0.0;
  FloquetDrive drive;
  FloquetDrift drift;

  /// Ideal two-body couplings of strength `j` (rad/s) with no spurious terms.
  static FloquetQubitTier ideal(double j, const FloquetDrive& drive);

  CMatrix hamiltonian(double t) const;
  double step() const;
  /// Propagator over [t0, t1]; dt = 0 selects step().
  CMatrix propagate(double t0, double t1, double dt = 0.0, const StepObserver& observer = {}) const;
};

struct FloquetPopulations {
  std::vector<double> time;
  std::vector<double> plus;   ///< P(+++)
  std::vector<double> minus;  ///< P(---)
};

/// |+++> evolved under the tier, sampled every `resolution` seconds up to `t1`.
FloquetPopulations floquet_populations(const FloquetQubitTier& tier, double t1, double resolution);

/// Probabilities of |+++> and |---> in the state u |+++>.
std::array<double, 2> plus_minus_populations(const CMatrix& u);

/// Lab-frame drives of the three-transmon device. omega1, omega3 and omega_c are
/// coefficients of the charge operators; the Floquet weights are qubit-level Rabi
/// rates and are divided by the central transition's charge matrix element.
struct FloquetDeviceDrive {
  double omega1 = 0.0;  ///< cross-resonance amplitude on Q1 (rad/s)
  double omega3 = 0.0;  ///< cross-resonance amplitude on Q3
  double omega_c = 0.0;
  FloquetDrive drive;
  double sample_period = 1e-9;
  int ramp_samples = 0;
};

/// Charge-operator matrix element |<0|y_j|1>| between dressed computational states of transmon j.
double charge_matrix_element(const FullModel& model, int j);

/// Program realizing the Floquet drive on the full model: both side qubits
/// driven at the central qubit frequency, the central qubit driven resonantly.
PulseProgram floquet_device_program(const FullModel& model, const FloquetDeviceDrive& d);

}  // namespace vqgo
