// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "vqgo/core/pauli.hpp"
#include "vqgo/noise/readout.hpp"
#include "vqgo/tomography/process_matrix.hpp"

namespace vqgo {

/// Pass as `shots` to request exact expectation values.
inline constexpr int kExactShots = 0;

/// Black-box channel Gamma queried through prepare-and-measure settings.
class ChannelOracle {
 public:
  virtual ~ChannelOracle() = default;
  virtual int num_qubits() const = 0;
  /// Estimate of tr[Gamma(rho) P]. `task` selects the random stream so that
  /// settings can be evaluated in any order.
  virtual double expectation(const CMatrix& rho, const PauliString& obs, int shots,
                             std::uint64_t task) const = 0;
};

/// Oracle backed by an explicit map plus readout error and shot noise.
class MapOracle : public ChannelOracle {
 public:
  MapOracle(int n, ChannelMap channel, ReadoutModel readout = {}, std::uint64_t seed = 0);

  int num_qubits() const override { return n_; }
  double expectation(const CMatrix& rho, const PauliString& obs, int shots,
                     std::uint64_t task) const override;

 private:
  int n_;
  ChannelMap channel_;
  ReadoutModel readout_;
  std::uint64_t seed_;
};

MapOracle unitary_oracle(const CMatrix& u, ReadoutModel readout = {}, std::uint64_t seed = 0);

}  // namespace vqgo
