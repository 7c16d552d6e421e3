// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "vqgo/device/pulse.hpp"
#include "vqgo/device/transmon.hpp"

namespace vqgo {

/// Lab-frame transmon chain expressed in its static (dressed) eigenbasis,
/// truncated to the lowest `global_truncation` states.
class FullModel {
 public:
  explicit FullModel(const DeviceModel& dev);

  const DeviceModel& device() const { return dev_; }
  int n() const { return dev_.n(); }
  int dim() const { return static_cast<int>(energy_.size()); }
  /// Dressed energies relative to the dressed ground state (rad/s).
  const RVector& energies() const { return energy_; }
  /// Charge operator y_j of transmon j in the dressed basis.
  const CMatrix& drive_operator(int j) const { return y_[static_cast<std::size_t>(j)]; }
  /// Dressed-basis index of the computational state with bit string b (qubit 1 most significant).
  int computational_index(int b) const { return comp_[static_cast<std::size_t>(b)]; }
  /// Dressed single-excitation frequencies E(e_j) - E(0).
  const std::vector<double>& qubit_frequencies() const { return qfreq_; }
  /// Uncoupled single-transmon spectra.
  const TransmonSpectrum& bare_spectrum() const { return bare_; }

  CMatrix hamiltonian(const std::vector<ChannelDrive>& drives, double t) const;

  /// Split-operator (Strang) propagation of the columns of `psi` over [t0, t1].
  /// The static part is applied exactly; each drive term through its eigenbasis.
  /// `observe` is invoked at every time listed in `checkpoints` (which must lie in (t0, t1]).
  CMatrix propagate(const DriveSource& drives, const CMatrix& psi, double t0, double t1, double dt,
                    const std::vector<double>& checkpoints = {},
                    const std::function<void(double, const CMatrix&)>& observe = {}) const;

  /// Frame rotating at the dressed qubit frequencies, as a diagonal over the dressed basis.
  CVector frame_phases(double t) const;

 private:
  DeviceModel dev_;
  TransmonSpectrum bare_;
  RVector energy_;
  std::vector<CMatrix> y_;
  std::vector<CMatrix> y_vecs_;
  std::vector<RVector> y_vals_;
  std::vector<int> comp_;
  std::vector<std::vector<int>> occupation_;
  std::vector<double> qfreq_;
};

CMatrix build_lab_hamiltonian(const DeviceModel& dev, const PulseProgram& prog, double t);
CMatrix build_lab_hamiltonian(const FullModel& model, const PulseProgram& prog, double t);

struct SubspaceUnitary {
  CMatrix u;              ///< 2^n x 2^n, rotating qubit frame
  double leakage = 0.0;   ///< 1 - min singular value^2 of the projected block
};

/// Computational block of a propagator given as dressed-basis columns for the
/// 2^n computational inputs (or the full square propagator), made unitary by
/// polar decomposition and moved into the frame rotating at the qubit frequencies.
SubspaceUnitary qubit_subspace_unitary(const FullModel& model, const CMatrix& propagated, double t,
                                       double max_leakage = 0.05);

/// Propagates the computational inputs through the whole program and returns the
/// software-frame gate.
SubspaceUnitary qubit_subspace_unitary(const FullModel& model, const PulseProgram& prog, double dt = 4e-12,
                                       double max_leakage = 0.05);

/// Columns holding the dressed computational basis states, in bit-string order.
CMatrix computational_inputs(const FullModel& model);

}  // namespace vqgo
