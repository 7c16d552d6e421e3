// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "vqgo/core/density.hpp"

namespace vqgo {

/// Tetrahedral SIC states. State 0 is |0><0|.
const std::array<DensityMatrix, 4>& sic_states();

/// Bloch vectors of sic_states(), rows (1, x, y, z).
const RMatrix& sic_design_matrix();

/// Product state sic_k1 (x) ... (x) sic_kn for the base-4 digits of `index`, qubit 1 most significant.
CMatrix sic_product(int n, int index);

}  // namespace vqgo
