// SPDX-License-Identifier: Apache-2.0
#include "vqgo/tomography/reduced.hpp"

#include <cmath>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"

namespace vqgo {
namespace {

CVector plus_zero() {
  CVector v = CVector::Zero(4);
  v(0) = v(2) = 1.0 / std::sqrt(2.0);
  return v;
}

/// Columns b_k = sigma_k |+0> for sigma_k in the span.
CMatrix span_basis() {
  const CVector p0 = plus_zero();
  CMatrix b(4, 4);
  for (int k = 0; k < 4; ++k) b.col(k) = reduced_span()[static_cast<std::size_t>(k)].matrix() * p0;
  return b;
}

ReducedChi chi_of_state(const CMatrix& rho) {
  const CMatrix b = span_basis();
  ReducedChi r;
  r.m = b.adjoint() * rho * b;
  r.m = 0.5 * (r.m + r.m.adjoint());
  return r;
}

}  // namespace

const std::array<PauliString, 4>& reduced_span() {
  static const std::array<PauliString, 4> s{PauliString("II"), PauliString("ZI"), PauliString("IX"),
                                            PauliString("ZX")};
  return s;
}

const std::vector<PauliString>& reduced_consumed_observables() {
  static const std::vector<PauliString> obs = [] {
    std::vector<PauliString> out;
    for (const auto& p : pauli_basis(2)) {
      const auto& l = p.labels();
      if (l == "II" || l == "ZI" || l == "IX" || l == "ZX") continue;
      out.push_back(p);
    }
    return out;
  }();
  return obs;
}

ReducedTomographyData reduced_process_tomography_data(const ChannelOracle& oracle, int shots) {
  require(oracle.num_qubits() == 2, "reduced_process_tomography: two-qubit channels only");
  const CMatrix rho_in = projector(plus_zero());
  const auto basis = pauli_basis(2);
  ReducedTomographyData data;
  data.expectations.resize(15);
  for (int q = 1; q < 16; ++q)
    data.expectations[static_cast<std::size_t>(q - 1)] =
        oracle.expectation(rho_in, basis[static_cast<std::size_t>(q)], shots, static_cast<std::uint64_t>(q));
  data.chi = reduced_chi_from_expectations(data.expectations);
  return data;
}

ReducedChi reduced_chi_from_expectations(const std::vector<double>& expectations) {
  require(expectations.size() == 15, "reduced_chi_from_expectations: 15 expectations required");
  const auto basis = pauli_basis(2);
  CMatrix rho = CMatrix::Identity(4, 4) / 4.0;
  for (int q = 1; q < 16; ++q) {
    const auto& p = basis[static_cast<std::size_t>(q)];
    const auto& l = p.labels();
    if (l == "ZI" || l == "IX" || l == "ZX") continue;
    rho += expectations[static_cast<std::size_t>(q - 1)] * p.matrix() / 4.0;
  }
  return chi_of_state(rho);
}

ReducedChi reduced_process_tomography(const ChannelOracle& oracle, int shots) {
  return reduced_process_tomography_data(oracle, shots).chi;
}

ReducedChi reduced_chi_from_unitary(const CMatrix& u) {
  require(u.rows() == 4 && u.cols() == 4, "reduced_chi_from_unitary: two-qubit unitary required");
  const CVector out = u * plus_zero();
  return chi_of_state(projector(out));
}

double reduced_overlap(const ReducedChi& r, const ReducedChi& target) {
  return (r.m.array() * target.m.conjugate().array()).sum().real();
}

bool in_reduced_span(const CMatrix& u, double tol) {
  if (u.rows() != 4) return false;
  const CVector c = pauli_coefficients(u);
  double outside = 0.0;
  const auto basis = pauli_basis(2);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& l = basis[k].labels();
    if (l == "II" || l == "ZI" || l == "IX" || l == "ZX") continue;
    outside += std::norm(c(static_cast<Eigen::Index>(k)));
  }
  return outside <= tol;
}

}  // namespace vqgo
