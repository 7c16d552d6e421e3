// SPDX-License-Identifier: Apache-2.0
#include "vqgo/core/density.hpp"

#include <cmath>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"

namespace vqgo {

DensityMatrix::DensityMatrix(CMatrix rho, double tol) : rho_(std::move(rho)) {
  require(rho_.rows() == rho_.cols() && rho_.rows() > 0, "DensityMatrix: not square");
  require(std::abs(rho_.trace() - cplx(1.0, 0.0)) <= 1e-10, "DensityMatrix: trace is not 1");
  require(hermiticity_error(rho_) <= 1e-12, "DensityMatrix: not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho_, Eigen::EigenvaluesOnly);
  require(es.eigenvalues().minCoeff() >= -tol, "DensityMatrix: negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const CVector& psi) {
  const double nrm = psi.norm();
  require(nrm > 0.0, "DensityMatrix::pure: zero vector");
  CMatrix rho = projector(psi / nrm);
  rho = 0.5 * (rho + rho.adjoint());
  return DensityMatrix(rho);
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

CVector basis_state(int dim, int index) {
  require(index >= 0 && index < dim, "basis_state: index out of range");
  CVector v = CVector::Zero(dim);
  v(index) = 1.0;
  return v;
}

CMatrix projector(const CVector& psi) { return psi * psi.adjoint(); }

}  // namespace vqgo
