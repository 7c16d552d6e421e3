// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "vqgo/tomography/oracle.hpp"

namespace vqgo {

struct ZeroFidelitySample {
  int input = 0;       ///< SIC product index, base-4 digits per qubit
  int observable = 0;  ///< pauli_basis index
  double ideal = 0.0;  ///< tr[U rho_i U^dagger W_j] with W_j = sigma_j / sqrt(d)
  double probability = 0.0;
};

/// Importance-sampled (input, observable) pairs for estimating F0 against `target`.
struct ZeroFidelityPlan {
  int n = 0;
  CMatrix target;
  int l = 0;
  std::uint64_t seed = 0;
  /// Sum of the raw weights before normalization.
  double normalization = 0.0;
  std::vector<ZeroFidelitySample> samples;
};

/// Draws l pairs with Pr(i, j) proportional to ideal(i, j)^2.
ZeroFidelityPlan make_zero_fidelity_plan(const CMatrix& target, int l, std::uint64_t seed);

/// F0 = (1/d^2) sum_ij tr[U rho_i U^dagger W_j] tr[Gamma(rho_i) W_j].
double zero_fidelity_exact(const CMatrix& target, const ChannelMap& channel);

/// Mean of X(i, j) = tr[Gamma(rho_i) W_j] / ideal(i, j) over the plan; std_error = std / sqrt(l).
Estimate zero_fidelity_estimate(const ZeroFidelityPlan& plan, const ChannelOracle& oracle, int shots,
                                std::uint64_t task_base = 0);

nlohmann::json to_json(const ZeroFidelityPlan& plan);
ZeroFidelityPlan zero_fidelity_plan_from_json(const nlohmann::json& j);

}  // namespace vqgo
