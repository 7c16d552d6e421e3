// SPDX-License-Identifier: Apache-2.0
#include "vqgo/device/transmon.hpp"

#include <cmath>
#include <vector>

#include "vqgo/core/errors.hpp"

namespace vqgo {

void DeviceModel::validate() const {
  require(n() >= 1, "DeviceModel: at least one transmon");
  require(static_cast<int>(epsilon.size()) == n(), "DeviceModel: one epsilon per transmon");
  require(static_cast<int>(coupling.size()) == n() - 1, "DeviceModel: one coupling per adjacent pair");
  require(levels >= 2, "DeviceModel: at least two levels per transmon");
  require(fock_dim >= levels + 4, "DeviceModel: oscillator basis too small");
  long full = 1;
  for (int j = 0; j < n(); ++j) full *= levels;
  require(global_truncation >= (1 << n()), "DeviceModel: truncation must keep the computational subspace");
  if (global_truncation > full)
    fail(ErrorCategory::configuration, "DeviceModel: global truncation larger than levels^n");
  for (double e : epsilon) require(e > 0.0, "DeviceModel: epsilon must be positive");
}

TransmonLevels diagonalize_transmon(double omega_h, double epsilon, int levels, int fock_dim) {
  require(levels >= 2 && fock_dim > levels, "diagonalize_transmon: bad truncation");
  const int n = fock_dim;
  RMatrix xop = RMatrix::Zero(n, n);
  CMatrix yop = CMatrix::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) {
    const double s = std::sqrt(static_cast<double>(k + 1));
    xop(k, k + 1) = xop(k + 1, k) = s;
    // y = -i(b - b^dagger): <k|y|k+1> = -i sqrt(k+1)
    yop(k, k + 1) = cplx(0.0, -s);
    yop(k + 1, k) = cplx(0.0, s);
  }
  Eigen::SelfAdjointEigenSolver<RMatrix> xs(xop);
  RVector c(n);
  for (int k = 0; k < n; ++k) c(k) = std::cos(std::sqrt(epsilon) * xs.eigenvalues()(k));
  const RMatrix cosx = xs.eigenvectors() * c.asDiagonal() * xs.eigenvectors().transpose();
  const RMatrix y2 = (yop * yop).real();
  RMatrix h = 0.25 * omega_h * (y2 - (2.0 / epsilon) * cosx);
  h = 0.5 * (h + h.transpose());
  Eigen::SelfAdjointEigenSolver<RMatrix> hs(h);
  // Large oscillator bases reach the neighbouring cosine wells; keep the states of the central one.
  const RMatrix in_x = xs.eigenvectors().transpose() * hs.eigenvectors();
  std::vector<int> keep;
  for (int k = 0; k < n && static_cast<int>(keep.size()) < levels; ++k) {
    double central = 0.0;
    for (int m = 0; m < n; ++m)
      if (std::sqrt(epsilon) * std::abs(xs.eigenvalues()(m)) < kPi) central += in_x(m, k) * in_x(m, k);
    if (central > 0.5) keep.push_back(k);
  }
  require(static_cast<int>(keep.size()) == levels, "diagonalize_transmon: too few bound levels in the basis");
  RMatrix v(n, levels);
  RVector e(levels);
  for (int k = 0; k < levels; ++k) {
    v.col(k) = hs.eigenvectors().col(keep[static_cast<std::size_t>(k)]);
    e(k) = hs.eigenvalues()(keep[static_cast<std::size_t>(k)]);
  }
  // Sign convention: <k|x|k+1> > 0, as for the harmonic oscillator.
  for (int k = 0; k + 1 < levels; ++k) {
    const double xe = v.col(k).dot(xop * v.col(k + 1));
    if (xe < 0) v.col(k + 1) *= -1.0;
  }
  TransmonLevels out;
  out.energy = e.array() - e(0);
  const CMatrix vc = v.cast<cplx>();
  out.y = vc.adjoint() * yop * vc;
  out.y = 0.5 * (out.y + out.y.adjoint());
  return out;
}

TransmonSpectrum transmon_spectrum(const DeviceModel& dev) {
  TransmonSpectrum s;
  for (int j = 0; j < dev.n(); ++j) {
    const auto lv = diagonalize_transmon(dev.omega_h[static_cast<std::size_t>(j)], dev.epsilon[static_cast<std::size_t>(j)],
                                         std::max(3, dev.levels), dev.fock_dim);
    s.omega01.push_back(lv.energy(1));
    s.alpha.push_back(lv.energy(2) - 2.0 * lv.energy(1));
  }
  return s;
}

}  // namespace vqgo
