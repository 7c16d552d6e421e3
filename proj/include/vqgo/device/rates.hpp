// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "vqgo/device/full_model.hpp"
#include "vqgo/device/qubit_model.hpp"

namespace vqgo {

/// Effective static generator H_eff = sum_P c_P P (rad/s) of a quasi-static drive.
struct EffectiveRates {
  int n = 0;
  std::vector<std::string> terms;  ///< the operator set the fit is restricted to
  CVector coefficients;            ///< all Pauli coefficients of the fitted generator, pauli_basis order
  /// Weight of the generator outside `terms` (identity excluded), relative to the whole.
  double residual = 0.0;

  /// Coefficient of any Pauli label, real part.
  double operator[](const std::string& label) const;
};

/// Cross-resonance term set for a control/target pair: IA and ZA for A in {I, X, Y, Z}.
const std::vector<std::string>& cross_resonance_terms();
/// The cross-resonance set for a control/target pair of an n-qubit register.
std::vector<std::string> cross_resonance_terms(int n, int control, int target);
/// Seven-term set of the three-transmon effective Hamiltonian.
const std::vector<std::string>& three_qubit_terms();

/// Fits exp(-i H_eff t) to unitaries sampled at t_k = t_0 + k tau by accumulating
/// matrix logarithms of successive increments and regressing on time.
EffectiveRates fit_effective_rates(const std::vector<CMatrix>& unitaries, double tau, const std::vector<std::string>& terms,
                                   double max_residual = 0.05);

struct RateExtractionOptions {
  int points = 8;
  double interval = 20e-9;  ///< spacing of the sampled flat-top durations
  double ramp = 10e-9;      ///< Gaussian rise and fall of the extraction pulses
  double max_residual = 0.05;
  double dt = 0.0;          ///< 0: automatic for the qubit model, 4 ps for the full model
  std::vector<std::string> terms;  ///< empty: the default set for the register size
};

/// Rates of the program's channels held at their mid-program envelope values.
/// Each sample is a complete ramped pulse, so the drive-induced dressing is
/// undone before the logarithm is taken.
EffectiveRates extract_effective_rates(const QubitModel& model, const PulseProgram& prog,
                                       const RateExtractionOptions& opt = {});
EffectiveRates extract_effective_rates(const FullModel& model, const PulseProgram& prog,
                                       const RateExtractionOptions& opt = {});

}  // namespace vqgo
