// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "vqgo/core/types.hpp"

namespace vqgo {

using Generator = std::function<CMatrix(double)>;
/// Invoked after each step with the step end time and the accumulated propagator.
using StepObserver = std::function<void(double, const CMatrix&)>;

/// Time-ordered product of exp(-i H(t_mid) h) over equal steps h <= dt covering [t0, t1].
CMatrix propagate_piecewise(const Generator& h_of_t, double t0, double t1, double dt,
                            const StepObserver& observer = {});

/// Step size satisfying max ||H|| dt <= budget, estimated from samples of the generator.
double step_for_norm(double max_norm, double budget = 0.1);

}  // namespace vqgo
