// SPDX-License-Identifier: Apache-2.0
#include "vqgo/core/linalg.hpp"

#include <cmath>

#include "vqgo/core/errors.hpp"

namespace vqgo {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix kron_all(const std::vector<CMatrix>& factors) {
  require(!factors.empty(), "kron_all: no factors");
  CMatrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

CMatrix dagger(const CMatrix& m) { return m.adjoint(); }

double hermiticity_error(const CMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_error(const CMatrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "max_abs_diff: shape mismatch");
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m, double tol) { return hermiticity_error(m) <= tol; }
bool is_unitary(const CMatrix& u, double tol) { return unitarity_error(u) <= tol; }

CMatrix expm(const CMatrix& h, double t) {
  // Relative check: generators are carried in rad/s and reach 1e10.
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  require(hermiticity_error(h) <= 1e-12 * scale, "expm: generator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const RVector& w = es.eigenvalues();
  CVector phase(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) phase(k) = std::exp(cplx(0.0, -w(k) * t));
  return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix closest_unitary(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

CMatrix log_unitary(const CMatrix& u) {
  // A unitary is normal, so the complex Schur form is diagonal.
  Eigen::ComplexSchur<CMatrix> schur(u);
  const CMatrix& q = schur.matrixU();
  const CMatrix& t = schur.matrixT();
  CVector ang(t.rows());
  for (Eigen::Index k = 0; k < t.rows(); ++k) ang(k) = -std::arg(t(k, k));
  CMatrix g = q * ang.asDiagonal() * q.adjoint();
  return 0.5 * (g + g.adjoint());
}

CMatrix random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  CMatrix z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = cplx(n01(rng), n01(rng)) / std::sqrt(2.0);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const cplx d = r(k, k);
    q.col(k) *= d / std::abs(d);
  }
  return q;
}

CMatrix random_hermitian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  CMatrix z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = cplx(n01(rng), n01(rng));
  return 0.5 * (z + z.adjoint());
}

}  // namespace vqgo
