// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "vqgo/core/types.hpp"

namespace vqgo {

/// Validated density operator: unit trace, Hermitian, positive semidefinite.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix rho, double tol = 1e-9);

  static DensityMatrix pure(const CVector& psi);

  const CMatrix& matrix() const noexcept { return rho_; }
  int dim() const noexcept { return static_cast<int>(rho_.rows()); }
  double purity() const;

 private:
  CMatrix rho_;
};

CVector basis_state(int dim, int index);
CMatrix projector(const CVector& psi);

}  // namespace vqgo
