// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "vqgo/core/types.hpp"

namespace vqgo {

/// Linear map on density operators of n qubits.
using ChannelMap = std::function<CMatrix(const CMatrix&)>;

/// Process matrix over pauli_basis(n): Gamma(rho) = sum_mn chi_mn sigma_m rho sigma_n^dagger.
struct ProcessMatrix {
  int n = 0;
  CMatrix chi;

  int dim() const { return 1 << n; }
};

ProcessMatrix chi_from_unitary(const CMatrix& u);

/// Exact process matrix of an arbitrary linear map, through its Choi operator.
ProcessMatrix chi_from_channel(const ChannelMap& channel, int n);

/// Process matrix from the Pauli transfer matrix R_QP = tr[Q Gamma(P)] / d.
ProcessMatrix chi_from_ptm(const RMatrix& ptm, int n);

/// Re tr[a b^dagger]; the process fidelity when b is a unitary target.
double process_fidelity(const ProcessMatrix& a, const ProcessMatrix& b);

double chi_max_diff(const ProcessMatrix& a, const ProcessMatrix& b);

/// Max-norm distance of sum_mn chi_mn sigma_n^dagger sigma_m from the identity.
double trace_preservation_error(const ProcessMatrix& p);

CMatrix apply_chi(const ProcessMatrix& p, const CMatrix& rho);

}  // namespace vqgo
