// SPDX-License-Identifier: Apache-2.0
#include "vqgo/tomography/process_matrix.hpp"

#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"
#include "vqgo/core/pauli.hpp"

namespace vqgo {
namespace {

int qubits_of_dim(Eigen::Index d) {
  int n = 0;
  while ((Eigen::Index{1} << n) < d) ++n;
  require(n >= 1 && (Eigen::Index{1} << n) == d, "dimension is not 2^n");
  return n;
}

/// Columns are the vectorized Paulis |m>> = (1 (x) sigma_m)|Phi>.
CMatrix pauli_vec_basis(int n) {
  const int d = 1 << n;
  const auto basis = pauli_basis(n);
  CMatrix v(d * d, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t m = 0; m < basis.size(); ++m) {
    const CMatrix s = basis[m].matrix();
    for (int a = 0; a < d; ++a)
      for (int c = 0; c < d; ++c) v(a * d + c, static_cast<Eigen::Index>(m)) = s(c, a);
  }
  return v;
}

ProcessMatrix chi_from_choi(const CMatrix& choi, int n) {
  const int d = 1 << n;
  const CMatrix v = pauli_vec_basis(n);
  CMatrix chi = v.adjoint() * choi * v / static_cast<double>(d * d);
  chi = 0.5 * (chi + chi.adjoint());
  return {n, chi};
}

}  // namespace

ProcessMatrix chi_from_unitary(const CMatrix& u) {
  require(is_unitary(u, 1e-8), "chi_from_unitary: input is not unitary");
  const int n = qubits_of_dim(u.rows());
  const CVector c = pauli_coefficients(u);
  return {n, c * c.adjoint()};
}

ProcessMatrix chi_from_channel(const ChannelMap& channel, int n) {
  require(n >= 1, "chi_from_channel: n must be >= 1");
  const int d = 1 << n;
  CMatrix choi = CMatrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      CMatrix e = CMatrix::Zero(d, d);
      e(a, b) = 1.0;
      choi.block(a * d, b * d, d, d) = channel(e);
    }
  return chi_from_choi(choi, n);
}

ProcessMatrix chi_from_ptm(const RMatrix& ptm, int n) {
  const int d = 1 << n;
  const auto basis = pauli_basis(n);
  const auto count = static_cast<Eigen::Index>(basis.size());
  require(ptm.rows() == count && ptm.cols() == count, "chi_from_ptm: PTM shape mismatch");
  std::vector<CMatrix> mats;
  mats.reserve(basis.size());
  for (const auto& p : basis) mats.push_back(p.matrix());
  // Choi = (1/d) sum_PQ R_QP P^T (x) Q
  CMatrix choi = CMatrix::Zero(d * d, d * d);
  for (Eigen::Index p = 0; p < count; ++p) {
    CMatrix gp = CMatrix::Zero(d, d);
    for (Eigen::Index q = 0; q < count; ++q)
      if (ptm(q, p) != 0.0) gp += ptm(q, p) * mats[static_cast<std::size_t>(q)];
    choi += kron(mats[static_cast<std::size_t>(p)].transpose(), gp);
  }
  choi /= static_cast<double>(d);
  return chi_from_choi(choi, n);
}

double process_fidelity(const ProcessMatrix& a, const ProcessMatrix& b) {
  require(a.n == b.n && a.chi.rows() == b.chi.rows(), "process_fidelity: dimension mismatch");
  return (a.chi.array() * b.chi.conjugate().array()).sum().real();
}

double chi_max_diff(const ProcessMatrix& a, const ProcessMatrix& b) {
  require(a.n == b.n, "chi_max_diff: dimension mismatch");
  return max_abs_diff(a.chi, b.chi);
}

double trace_preservation_error(const ProcessMatrix& p) {
  const auto basis = pauli_basis(p.n);
  const int d = p.dim();
  CMatrix s = CMatrix::Zero(d, d);
  std::vector<CMatrix> mats;
  for (const auto& b : basis) mats.push_back(b.matrix());
  for (std::size_t m = 0; m < mats.size(); ++m)
    for (std::size_t k = 0; k < mats.size(); ++k) {
      const cplx c = p.chi(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k));
      if (c != cplx(0.0)) s += c * mats[k].adjoint() * mats[m];
    }
  return (s - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

CMatrix apply_chi(const ProcessMatrix& p, const CMatrix& rho) {
  const auto basis = pauli_basis(p.n);
  std::vector<CMatrix> mats;
  for (const auto& b : basis) mats.push_back(b.matrix());
  CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
  for (std::size_t m = 0; m < mats.size(); ++m) {
    const CMatrix left = mats[m] * rho;
    for (std::size_t k = 0; k < mats.size(); ++k) {
      const cplx c = p.chi(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k));
      if (c != cplx(0.0)) out += c * left * mats[k];
    }
  }
  return out;
}

}  // namespace vqgo
