// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "vqgo/core/pauli.hpp"
#include "vqgo/tomography/oracle.hpp"

namespace vqgo {

/// 4x4 block of chi on {II, ZI, IX, ZX}.
struct ReducedChi {
  CMatrix m = CMatrix::Zero(4, 4);
};

/// Span labels, in ReducedChi index order.
const std::array<PauliString, 4>& reduced_span();

/// The twelve observables whose expectations can be nonzero for a span
/// channel acting on |+0>. ZI, IX and ZX commute with every span element and
/// vanish on |+0>, so they are measured but not consumed.
const std::vector<PauliString>& reduced_consumed_observables();

inline constexpr int kReducedExpectationCount = 12;

struct ReducedTomographyData {
  /// Expectations of the 15 non-identity two-qubit Paulis, pauli_basis order without II.
  std::vector<double> expectations;
  ReducedChi chi;
};

/// Single preparation |+0>, state tomography of the output.
ReducedTomographyData reduced_process_tomography_data(const ChannelOracle& oracle, int shots);
ReducedChi reduced_process_tomography(const ChannelOracle& oracle, int shots);
/// Reduced chi from the 15 expectations; only the consumed twelve enter.
ReducedChi reduced_chi_from_expectations(const std::vector<double>& expectations);

/// Reduced chi of a two-qubit unitary: state of U|+0> in the {|+0>,|-0>,|+1>,|-1>} basis.
ReducedChi reduced_chi_from_unitary(const CMatrix& u);

/// Re tr[r target^dagger].
double reduced_overlap(const ReducedChi& r, const ReducedChi& target);

/// True when u lies in span{II, ZI, IX, ZX} up to `tol` in Pauli weight outside it.
bool in_reduced_span(const CMatrix& u, double tol = 1e-9);

}  // namespace vqgo
