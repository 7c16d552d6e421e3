// SPDX-License-Identifier: Apache-2.0
#include "vqgo/noise/readout.hpp"

#include <cmath>
#include <random>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"

namespace vqgo {
namespace {

const CMatrix& basis_change(char label) {
  static const CMatrix id = CMatrix::Identity(2, 2);
  static const CMatrix had = [] {
    CMatrix h(2, 2);
    h << 1, 1, 1, -1;
    return CMatrix(h / std::sqrt(2.0));
  }();
  static const CMatrix hsdg = [] {
    CMatrix sdg(2, 2);
    sdg << 1, 0, 0, cplx(0, -1);
    return CMatrix(had * sdg);
  }();
  switch (label) {
    case 'X': return had;
    case 'Y': return hsdg;
    default: return id;
  }
}

}  // namespace

ReadoutModel ReadoutModel::symmetric(int n, double p) {
  require(n >= 1, "ReadoutModel::symmetric: n must be >= 1");
  ReadoutModel r;
  r.p01.assign(static_cast<std::size_t>(n), p);
  r.p10.assign(static_cast<std::size_t>(n), p);
  r.validate(n);
  return r;
}

bool ReadoutModel::is_ideal() const {
  for (double p : p01) if (p != 0.0) return false;
  for (double p : p10) if (p != 0.0) return false;
  return true;
}

void ReadoutModel::validate(int n) const {
  require(p01.size() == p10.size(), "ReadoutModel: p01/p10 length mismatch");
  require(p01.empty() || static_cast<int>(p01.size()) == n, "ReadoutModel: wrong qubit count");
  for (std::size_t q = 0; q < p01.size(); ++q)
    require(p01[q] >= 0.0 && p01[q] < 0.5 && p10[q] >= 0.0 && p10[q] < 0.5,
            "ReadoutModel: confusion probabilities must lie in [0, 0.5)");
}

double readout_expectation(const CMatrix& rho, const PauliString& obs, const ReadoutModel& readout) {
  const int n = obs.num_qubits();
  require(rho.rows() == (1 << n), "readout_expectation: dimension mismatch");
  if (obs.is_identity()) return rho.trace().real();
  readout.validate(n);
  std::vector<CMatrix> f;
  for (char c : obs.labels()) f.push_back(basis_change(c));
  const CMatrix v = kron_all(f);
  const CMatrix rot = v * rho * v.adjoint();
  double e = 0.0;
  for (int b = 0; b < (1 << n); ++b) {
    double w = 1.0;
    for (int q = 0; q < n; ++q) {
      if (obs.labels()[static_cast<std::size_t>(q)] == 'I') continue;
      const bool one = (b >> (n - 1 - q)) & 1;
      w *= one ? -(1.0 - 2.0 * readout.flip10(q)) : (1.0 - 2.0 * readout.flip01(q));
    }
    e += rot(b, b).real() * w;
  }
  return e;
}

double sample_shots(const CMatrix& rho, const PauliString& obs, int shots, const ReadoutModel& readout,
                    std::uint64_t seed) {
  require(shots >= 1, "sample_shots: shots must be >= 1");
  if (obs.is_identity()) return 1.0;
  // Shots are i.i.d. and the recorded parity is +-1, so the count of +1
  // outcomes is binomial in the readout-folded expectation.
  const double e = std::clamp(readout_expectation(rho, obs, readout), -1.0, 1.0);
  std::mt19937_64 rng(seed);
  std::binomial_distribution<int> draw(shots, 0.5 * (1.0 + e));
  const int plus = draw(rng);
  return (2.0 * plus - shots) / shots;
}

double sample_shots(const DensityMatrix& state, const PauliString& obs, int shots, const ReadoutModel& readout,
                    std::uint64_t seed) {
  return sample_shots(state.matrix(), obs, shots, readout, seed);
}

}  // namespace vqgo
