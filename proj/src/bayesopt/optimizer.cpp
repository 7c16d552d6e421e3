// SPDX-License-Identifier: Apache-2.0
#include "vqgo/bayesopt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/rng.hpp"

namespace vqgo {

OptimizationTrace optimize(const Objective& objective, const SearchSpace& space, const OptimizerOptions& opt) {
  require(opt.budget >= 1, "optimize: budget must be at least 1");
  require(opt.design_fraction >= 0.0 && opt.design_fraction <= 1.0, "optimize: design fraction outside [0, 1]");
  const int d = space.dim();
  const int design = std::clamp(static_cast<int>(std::ceil(opt.design_fraction * opt.budget)), std::min(opt.budget, 2),
                                opt.budget);

  OptimizationTrace trace;
  trace.names = space.names();
  SobolSequence sobol(d, derive_seed(opt.seed, {0x64657369676eULL}));
  std::vector<RVector> units;
  std::vector<double> values, errors;
  std::vector<bool> failed;
  std::optional<GpSurrogate> gp;
  std::optional<GpHyper> hyper;

  for (int it = 0; it < opt.budget; ++it) {
    RVector u;
    std::string phase;
    if (it < design) {
      u = sobol.next();
      phase = "design";
    } else {
      const int n = static_cast<int>(units.size());
      RMatrix x(n, d);
      RVector y(n), se(n);
      for (int i = 0; i < n; ++i) {
        x.row(i) = units[static_cast<std::size_t>(i)].transpose();
        y(i) = values[static_cast<std::size_t>(i)];
        se(i) = errors[static_cast<std::size_t>(i)];
      }
      const bool refit = !hyper || n < opt.dense_refit_limit || (it - design) % opt.refit_interval == 0;
      gp = refit ? GpSurrogate::fit(x, y, se, opt.gp, hyper) : GpSurrogate(x, y, se, *hyper);
      hyper = gp->hyper();
      const double best = trace.records.back().incumbent_value;
      u = acquire(&*gp, space, best, derive_seed(opt.seed, {0x6163717569ULL, static_cast<std::uint64_t>(it)}),
                  opt.acquisition)
              .unit;
      phase = "bo";
    }

    const RVector xp = space.from_unit(u);
    TraceRecord rec;
    rec.iteration = it;
    rec.phase = phase;
    rec.x.assign(xp.data(), xp.data() + xp.size());
    rec.tick = opt.first_tick + it;
    try {
      const Evaluation e = objective(xp, rec.tick);
      if (!std::isfinite(e.value)) fail(ErrorCategory::invalid_argument, "objective returned a non-finite value");
      rec.value = e.value;
      rec.std_error = e.std_error;
      rec.extra = e.extra;
    } catch (const Error& e) {
      rec.failed = true;
      rec.error = e.what();
    }
    if (rec.failed) {
      // Worst observed value minus one standard deviation of the observed values.
      double worst = 0.0, sd = 1.0;
      std::vector<double> ok;
      for (std::size_t i = 0; i < values.size(); ++i)
        if (!failed[i]) ok.push_back(values[i]);
      if (!ok.empty()) {
        worst = *std::min_element(ok.begin(), ok.end());
        double m = 0.0;
        for (double v : ok) m += v;
        m /= static_cast<double>(ok.size());
        double var = 0.0;
        for (double v : ok) var += (v - m) * (v - m);
        sd = ok.size() > 1 ? std::sqrt(var / static_cast<double>(ok.size() - 1)) : 1.0;
      }
      rec.value = worst - sd;
      rec.std_error = 0.0;
    }
    units.push_back(u);
    values.push_back(rec.value);
    errors.push_back(rec.std_error);
    failed.push_back(rec.failed);

    if (trace.records.empty()) {
      rec.incumbent = it;
      rec.incumbent_value = rec.value;
    } else {
      const auto& prev = trace.records.back();
      const bool better = !rec.failed && (trace.records[static_cast<std::size_t>(prev.incumbent)].failed || rec.value > prev.incumbent_value);
      rec.incumbent = better ? it : prev.incumbent;
      rec.incumbent_value = better ? rec.value : prev.incumbent_value;
    }
    if (opt.on_record) opt.on_record(rec);
    trace.records.push_back(std::move(rec));
  }
  return trace;
}

const TraceRecord& recommend(const OptimizationTrace& trace, const SearchSpace& space, const GpFitOptions& gp) {
  require(!trace.records.empty(), "recommend: empty trace");
  std::vector<std::size_t> ok;
  bool noisy = false;
  for (std::size_t i = 0; i < trace.records.size(); ++i)
    if (!trace.records[i].failed) {
      ok.push_back(i);
      noisy = noisy || trace.records[i].std_error > 0.0;
    }
  if (!noisy || ok.size() < 2) return trace.incumbent();
  const int n = static_cast<int>(ok.size());
  RMatrix x(n, space.dim());
  RVector y(n), se(n);
  for (int i = 0; i < n; ++i) {
    const auto& r = trace.records[ok[static_cast<std::size_t>(i)]];
    x.row(i) = space.to_unit(Eigen::Map<const RVector>(r.x.data(), static_cast<Eigen::Index>(r.x.size()))).transpose();
    y(i) = r.value;
    se(i) = r.std_error;
  }
  const GpSurrogate s = GpSurrogate::fit(x, y, se, gp);
  int best = 0;
  double best_mean = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double m = s.predict(x.row(i).transpose()).mean;
    if (m > best_mean) {
      best_mean = m;
      best = i;
    }
  }
  return trace.records[ok[static_cast<std::size_t>(best)]];
}

}  // namespace vqgo
