// SPDX-License-Identifier: Apache-2.0
#include "vqgo/tomography/process_tomography.hpp"

#include "vqgo/core/errors.hpp"
#include "vqgo/core/pauli.hpp"
#include "vqgo/tomography/sic.hpp"

namespace vqgo {
namespace {

RMatrix kron_real(const RMatrix& a, const RMatrix& b) {
  RMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

ProcessMatrix process_tomography(const ChannelOracle& oracle, int n, int shots) {
  require(n >= 1 && n == oracle.num_qubits(), "process_tomography: qubit count mismatch");
  require(shots >= 0, "process_tomography: negative shot count");
  const int count = 1 << (2 * n);
  const auto basis = pauli_basis(n);

  // r(i, Q) = <Q> on the output of preparation i.
  RMatrix r(count, count);
  for (int i = 0; i < count; ++i) {
    const CMatrix rho = sic_product(n, i);
    r(i, 0) = 1.0;
    for (int q = 1; q < count; ++q)
      r(i, q) = oracle.expectation(rho, basis[static_cast<std::size_t>(q)], shots,
                                   static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(count) +
                                       static_cast<std::uint64_t>(q));
  }

  const RMatrix t1 = sic_design_matrix();
  const Eigen::FullPivLU<RMatrix> lu(t1);
  if (!lu.isInvertible()) fail(ErrorCategory::configuration, "process_tomography: singular preparation design");
  const RMatrix t1_inv = lu.inverse();
  RMatrix t_inv = t1_inv;
  for (int q = 1; q < n; ++q) t_inv = kron_real(t_inv, t1_inv);

  // rho_i = (1/d) sum_P T_iP P, so Gamma(P) = d sum_i (T^-1)_Pi Gamma(rho_i)
  // and R_QP = sum_i (T^-1)_Pi r_iQ.
  const RMatrix ptm = (t_inv * r).transpose();
  return chi_from_ptm(ptm, n);
}

}  // namespace vqgo
