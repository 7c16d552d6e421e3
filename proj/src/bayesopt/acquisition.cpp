// SPDX-License-Identifier: Apache-2.0
#include "vqgo/bayesopt/acquisition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <gsl/gsl_multimin.h>

#include "vqgo/core/errors.hpp"

namespace vqgo {
namespace {

struct EiProblem {
  const GpSurrogate* s;
  double best;
  int d;
};

double negative_ei(const gsl_vector* v, void* params) {
  const auto& p = *static_cast<const EiProblem*>(params);
  RVector u(p.d);
  double outside = 0.0;
  for (int i = 0; i < p.d; ++i) {
    const double x = gsl_vector_get(v, static_cast<std::size_t>(i));
    u(i) = std::clamp(x, 0.0, 1.0);
    outside += std::abs(x - u(i));
  }
  return -expected_improvement(*p.s, u, p.best) + outside;
}

}  // namespace

double expected_improvement(const GpSurrogate& s, const RVector& u, double best) {
  const auto p = s.predict(u);
  const double sd = std::sqrt(p.var);
  const double diff = p.mean - best;
  if (sd <= 1e-12 * std::max(1.0, s.y_scale())) return std::max(diff, 0.0);
  const double z = diff / sd;
  const double cdf = 0.5 * std::erfc(-z / std::sqrt(2.0));
  const double pdf = std::exp(-0.5 * z * z) / std::sqrt(kTwoPi);
  return std::max(0.0, diff * cdf + sd * pdf);
}

Acquisition acquire(const GpSurrogate* s, const SearchSpace& space, double best, std::uint64_t seed,
                    const AcquireOptions& opt) {
  require(opt.seeds >= 1, "acquire: at least one seed point");
  const int d = space.dim();
  SobolSequence sobol(d, seed);
  Acquisition out;
  if (!s) {
    out.unit = sobol.next();
    out.point = space.from_unit(out.unit);
    return out;
  }
  require(s->dim() == d, "acquire: surrogate dimension mismatch");
  std::vector<RVector> cand;
  std::vector<double> score;
  for (int k = 0; k < opt.seeds; ++k) {
    cand.push_back(sobol.next());
    score.push_back(expected_improvement(*s, cand.back(), best));
  }
  std::vector<int> order(cand.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return score[static_cast<std::size_t>(a)] > score[static_cast<std::size_t>(b)]; });

  out.unit = cand[static_cast<std::size_t>(order[0])];
  out.ei = score[static_cast<std::size_t>(order[0])];

  EiProblem p{s, best, d};
  gsl_multimin_function fn{&negative_ei, static_cast<std::size_t>(d), &p};
  gsl_vector* v = gsl_vector_alloc(static_cast<std::size_t>(d));
  gsl_vector* step = gsl_vector_alloc(static_cast<std::size_t>(d));
  gsl_vector_set_all(step, 0.05);
  gsl_multimin_fminimizer* m = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, static_cast<std::size_t>(d));
  const int refine = std::min<int>(opt.refine, static_cast<int>(cand.size()));
  for (int r = 0; r < refine; ++r) {
    const auto& c = cand[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])];
    for (int i = 0; i < d; ++i) gsl_vector_set(v, static_cast<std::size_t>(i), c(i));
    gsl_multimin_fminimizer_set(m, &fn, v, step);
    for (int it = 0; it < opt.max_iterations; ++it) {
      if (gsl_multimin_fminimizer_iterate(m) != GSL_SUCCESS) break;
      if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m), 1e-4) == GSL_SUCCESS) break;
    }
    RVector u(d);
    for (int i = 0; i < d; ++i) u(i) = std::clamp(gsl_vector_get(m->x, static_cast<std::size_t>(i)), 0.0, 1.0);
    const double e = expected_improvement(*s, u, best);
    if (e > out.ei) {
      out.ei = e;
      out.unit = u;
    }
  }
  gsl_multimin_fminimizer_free(m);
  gsl_vector_free(step);
  gsl_vector_free(v);
  out.point = space.from_unit(out.unit);
  return out;
}

}  // namespace vqgo
