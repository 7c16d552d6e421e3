// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "vqgo/tomography/oracle.hpp"
#include "vqgo/tomography/process_matrix.hpp"

namespace vqgo {

/// Expectation values consumed by full tomography: 4^n preparations times 4^n - 1 observables.
constexpr long full_tomography_expectation_count(int n) {
  return (1L << (2 * n)) * ((1L << (2 * n)) - 1);
}

/// Linear-inversion process tomography from SIC product preparations and all
/// non-identity Pauli observables. shots = kExactShots gives exact values.
ProcessMatrix process_tomography(const ChannelOracle& oracle, int n, int shots);

}  // namespace vqgo
