// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "vqgo/core/types.hpp"

namespace vqgo {

/// Chain of transmons, H_Q = (w_h/4)[y^2 - (2/eps) cos(sqrt(eps) x)] with
/// x = b + b^dagger, y = -i(b - b^dagger), coupled through J y_j y_{j+1}.
struct DeviceModel {
  std::vector<double> omega_h;   ///< rad/s
  std::vector<double> epsilon;   ///< dimensionless
  std::vector<double> coupling;  ///< rad/s, one per adjacent pair
  int levels = 4;                ///< per-transmon truncation m
  int global_truncation = 64;    ///< retained low-energy dressed states
  int fock_dim = 24;             ///< oscillator basis used to diagonalize each H_Q

  int n() const { return static_cast<int>(omega_h.size()); }
  void validate() const;
};

/// Lowest `levels` eigenstates of one transmon.
struct TransmonLevels {
  RVector energy;  ///< rad/s, ground state at 0
  CMatrix y;       ///< charge operator y in the eigenbasis
};

TransmonLevels diagonalize_transmon(double omega_h, double epsilon, int levels, int fock_dim = 24);

/// First-excitation frequencies and anharmonicities of uncoupled transmons (rad/s).
struct TransmonSpectrum {
  std::vector<double> omega01;
  std::vector<double> alpha;
};
TransmonSpectrum transmon_spectrum(const DeviceModel& dev);

}  // namespace vqgo
