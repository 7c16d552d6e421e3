// SPDX-License-Identifier: Apache-2.0
#include "vqgo/core/propagate.hpp"

#include <cmath>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"

namespace vqgo {

CMatrix propagate_piecewise(const Generator& h_of_t, double t0, double t1, double dt,
                            const StepObserver& observer) {
  require(t1 >= t0, "propagate_piecewise: t1 < t0");
  require(dt > 0.0, "propagate_piecewise: dt must be positive");
  const CMatrix h0 = h_of_t(t0);
  CMatrix u = CMatrix::Identity(h0.rows(), h0.cols());
  const double span = t1 - t0;
  if (span == 0.0) return u;
  const auto steps = static_cast<long>(std::ceil(span / dt - 1e-9));
  const double h = span / static_cast<double>(steps);
  for (long k = 0; k < steps; ++k) {
    const double ta = t0 + h * static_cast<double>(k);
    u = expm(h_of_t(ta + 0.5 * h), h) * u;
    if (observer) observer(t0 + h * static_cast<double>(k + 1), u);
  }
  return u;
}

double step_for_norm(double max_norm, double budget) {
  require(budget > 0.0, "step_for_norm: budget must be positive");
  if (max_norm <= 0.0) return INFINITY;
  return budget / max_norm;
}

}  // namespace vqgo
