// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "vqgo/bayesopt/gp.hpp"
#include "vqgo/bayesopt/search_space.hpp"

namespace vqgo {

/// E[max(f(u) - best, 0)] under the posterior; zero where the posterior variance vanishes.
double expected_improvement(const GpSurrogate& s, const RVector& u, double best);

struct AcquireOptions {
  int seeds = 64;       ///< quasi-random candidates scored before refinement
  int refine = 8;       ///< best candidates refined by Nelder-Mead
  int max_iterations = 150;
};

struct Acquisition {
  RVector point;  ///< in the search space's own units
  RVector unit;
  double ei = 0.0;
};

/// Maximizes expected improvement over `best` on the unit box. With no surrogate,
/// returns the first point of the seeded quasi-random sequence.
Acquisition acquire(const GpSurrogate* s, const SearchSpace& space, double best, std::uint64_t seed,
                    const AcquireOptions& opt = {});

}  // namespace vqgo
