// SPDX-License-Identifier: Apache-2.0
#include "vqgo/tomography/sic.hpp"

#include <cmath>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"
#include "vqgo/core/pauli.hpp"

namespace vqgo {

const RMatrix& sic_design_matrix() {
  static const RMatrix t = [] {
    const double a = 2.0 * std::sqrt(2.0) / 3.0;
    const double b = std::sqrt(2.0) / 3.0;
    const double c = std::sqrt(2.0 / 3.0);
    RMatrix m(4, 4);
    m << 1, 0, 0, 1,
         1, a, 0, -1.0 / 3.0,
         1, -b, c, -1.0 / 3.0,
         1, -b, -c, -1.0 / 3.0;
    return m;
  }();
  return t;
}

const std::array<DensityMatrix, 4>& sic_states() {
  static const std::array<DensityMatrix, 4> states = [] {
    const RMatrix& t = sic_design_matrix();
    auto make = [&](int k) {
      CMatrix rho = 0.5 * (pauli_matrix('I') + t(k, 1) * pauli_matrix('X') + t(k, 2) * pauli_matrix('Y') +
                           t(k, 3) * pauli_matrix('Z'));
      return DensityMatrix(0.5 * (rho + rho.adjoint()));
    };
    return std::array<DensityMatrix, 4>{make(0), make(1), make(2), make(3)};
  }();
  return states;
}

CMatrix sic_product(int n, int index) {
  require(n >= 1 && index >= 0 && index < (1 << (2 * n)), "sic_product: index out of range");
  std::vector<CMatrix> f(static_cast<std::size_t>(n));
  for (int q = n - 1; q >= 0; --q) {
    f[static_cast<std::size_t>(q)] = sic_states()[static_cast<std::size_t>(index % 4)].matrix();
    index /= 4;
  }
  return kron_all(f);
}

}  // namespace vqgo
