// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "vqgo/bayesopt/acquisition.hpp"
#include "vqgo/bayesopt/search_space.hpp"
#include "vqgo/bayesopt/trace.hpp"

namespace vqgo {

struct Evaluation {
  double value = 0.0;
  double std_error = 0.0;
  std::map<std::string, double> extra;
};

/// Figure of merit to maximize at a point of the search space; `tick` counts evaluations.
/// Throwing vqgo::Error marks the evaluation failed.
using Objective = std::function<Evaluation(const RVector& x, long tick)>;

struct OptimizerOptions {
  int budget = 100;
  double design_fraction = 0.25;  ///< share of the budget spent on the quasi-random design
  std::uint64_t seed = 0;
  int dense_refit_limit = 50;     ///< refit hyperparameters every iteration below this many points
  int refit_interval = 5;         ///< and every this many iterations above it
  long first_tick = 0;
  AcquireOptions acquisition;
  GpFitOptions gp;
  std::function<void(const TraceRecord&)> on_record;
};

/// Quasi-random design followed by GP/EI Bayesian optimization. Every evaluation is recorded.
OptimizationTrace optimize(const Objective& objective, const SearchSpace& space, const OptimizerOptions& opt);

/// Evaluated point with the largest GP posterior mean, which discounts lucky noisy
/// draws. Equals the raw incumbent when every recorded standard error is zero.
const TraceRecord& recommend(const OptimizationTrace& trace, const SearchSpace& space, const GpFitOptions& gp = {});

}  // namespace vqgo
