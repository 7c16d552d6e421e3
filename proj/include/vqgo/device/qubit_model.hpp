// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "vqgo/core/propagate.hpp"
#include "vqgo/device/pulse.hpp"

namespace vqgo {

/// Chain of two-level qubits with H = sum -(w_i/2) Z_i + sum J_i Y_i Y_{i+1} + drives.
struct QubitModel {
  std::vector<double> freq;      ///< rad/s
  std::vector<double> coupling;  ///< rad/s, one per adjacent pair

  int n() const { return static_cast<int>(freq.size()); }
  void validate() const;
  /// Largest J / |w_i - w_j| over coupled pairs.
  double coupling_ratio() const;
  std::vector<std::string> warnings() const;
};

/// Transition frequencies of the coupled chain in the rotating-wave approximation:
/// single-excitation eigenvalues, each assigned to the qubit it overlaps most.
std::vector<double> dressed_frequencies(const QubitModel& model);

/// Constant d^Z rates that make each software frame rotate at its dressed frequency.
void track_dressed_frames(PulseProgram& prog, const QubitModel& model);

enum class Frame { lab, rotating };

/// Lab frame: the full model. Rotating frame (at each qubit frequency): drives
/// and couplings under the rotating-wave approximation.
CMatrix build_qubit_hamiltonian(const QubitModel& model, const PulseProgram& prog, double t, Frame frame);
CMatrix qubit_hamiltonian(const QubitModel& model, const std::vector<ChannelDrive>& drives, double t, Frame frame);

/// R(t) = prod exp(-i w_q t Z_q / 2), mapping lab-frame states into the rotating frame.
CMatrix rotating_frame(const QubitModel& model, double t);

/// prod exp(i Phi_q(t) Z_q / 2): the software-frame correction of virtual Z.
CMatrix software_frame(const PulseProgram& prog, int n, double t);

struct PropagationOptions {
  double dt = 0.0;           ///< 0 selects the step from the norm budget
  double norm_budget = 0.1;  ///< bound on max ||H|| dt, oscillation rates included
};

/// Step size for the qubit model under `budget`, counting drive norms and the
/// fastest rotating-frame oscillation.
double qubit_model_step(const QubitModel& model, const PulseProgram& prog, Frame frame, double budget);

/// Gate propagator over the program, expressed in the rotating software frame.
CMatrix propagate_qubit_model(const QubitModel& model, const PulseProgram& prog, Frame frame = Frame::rotating,
                              const PropagationOptions& opt = {});

/// Propagator of an arbitrary drive source over [t0, t1] in the rotating frame.
CMatrix propagate_qubit_drives(const QubitModel& model, const DriveSource& drives, double t0, double t1, double dt,
                               const StepObserver& observer = {});

/// Operator for qubit q (0-based) in an n-qubit register.
CMatrix embed(const CMatrix& op, int q, int n);

}  // namespace vqgo
