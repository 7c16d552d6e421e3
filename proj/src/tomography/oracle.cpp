// SPDX-License-Identifier: Apache-2.0
#include "vqgo/tomography/oracle.hpp"

#include "vqgo/core/errors.hpp"
#include "vqgo/core/rng.hpp"

namespace vqgo {

MapOracle::MapOracle(int n, ChannelMap channel, ReadoutModel readout, std::uint64_t seed)
    : n_(n), channel_(std::move(channel)), readout_(std::move(readout)), seed_(seed) {
  require(n_ >= 1, "MapOracle: n must be >= 1");
  readout_.validate(n_);
}

double MapOracle::expectation(const CMatrix& rho, const PauliString& obs, int shots, std::uint64_t task) const {
  require(obs.num_qubits() == n_, "MapOracle: observable size mismatch");
  const CMatrix out = channel_(rho);
  if (shots == kExactShots) return readout_expectation(out, obs, readout_);
  return sample_shots(out, obs, shots, readout_, derive_seed(seed_, {task}));
}

MapOracle unitary_oracle(const CMatrix& u, ReadoutModel readout, std::uint64_t seed) {
  int n = 0;
  while ((1 << n) < u.rows()) ++n;
  require((1 << n) == u.rows(), "unitary_oracle: dimension is not 2^n");
  const CMatrix ud = u.adjoint();
  return MapOracle(n, [u, ud](const CMatrix& rho) { return CMatrix(u * rho * ud); }, std::move(readout), seed);
}

}  // namespace vqgo
