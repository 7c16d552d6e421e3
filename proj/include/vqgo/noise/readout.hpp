// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "vqgo/core/density.hpp"
#include "vqgo/core/pauli.hpp"

namespace vqgo {

/// Independent per-qubit confusion. Empty vectors mean ideal readout.
struct ReadoutModel {
  std::vector<double> p01;  ///< read 1 given 0
  std::vector<double> p10;  ///< read 0 given 1

  static ReadoutModel ideal() { return {}; }
  static ReadoutModel symmetric(int n, double p);

  bool is_ideal() const;
  double flip01(int q) const { return p01.empty() ? 0.0 : p01.at(static_cast<std::size_t>(q)); }
  double flip10(int q) const { return p10.empty() ? 0.0 : p10.at(static_cast<std::size_t>(q)); }
  void validate(int n) const;
};

/// Mean of the recorded +-1 parity of `obs` on `rho`, readout error included.
double readout_expectation(const CMatrix& rho, const PauliString& obs, const ReadoutModel& readout);

/// Shot-sampled estimate of readout_expectation.
double sample_shots(const DensityMatrix& state, const PauliString& obs, int shots,
                    const ReadoutModel& readout, std::uint64_t seed);
double sample_shots(const CMatrix& rho, const PauliString& obs, int shots, const ReadoutModel& readout,
                    std::uint64_t seed);

}  // namespace vqgo
