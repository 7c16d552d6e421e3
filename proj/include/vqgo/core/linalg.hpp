// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>
#include <vector>

#include "vqgo/core/types.hpp"

namespace vqgo {

CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix kron_all(const std::vector<CMatrix>& factors);

CMatrix dagger(const CMatrix& m);

/// Largest entrywise modulus of m - m^dagger.
double hermiticity_error(const CMatrix& m);
/// Largest entrywise modulus of U^dagger U - 1.
double unitarity_error(const CMatrix& u);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

bool is_hermitian(const CMatrix& m, double tol = 1e-12);
bool is_unitary(const CMatrix& u, double tol = 1e-10);

/// exp(-i h t) for Hermitian h, by eigendecomposition.
CMatrix expm(const CMatrix& h, double t);

/// Closest unitary in Frobenius norm (unitary factor of the polar decomposition).
CMatrix closest_unitary(const CMatrix& m);

/// Principal matrix logarithm of a unitary, returned as Hermitian g with u = exp(-i g).
CMatrix log_unitary(const CMatrix& u);

CMatrix random_unitary(int dim, std::mt19937_64& rng);
CMatrix random_hermitian(int dim, std::mt19937_64& rng);

}  // namespace vqgo
