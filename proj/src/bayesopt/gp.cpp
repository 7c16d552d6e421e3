// SPDX-License-Identifier: Apache-2.0
#include "vqgo/bayesopt/gp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include <gsl/gsl_multimin.h>

#include "vqgo/core/errors.hpp"

namespace vqgo {
namespace {

constexpr double kMinLength = 0.01, kMaxLength = 10.0;
constexpr double kMinSignal = 0.05, kMaxSignal = 20.0;
constexpr double kMinNugget = 1e-8, kMaxNugget = 1.0;
constexpr double kPinnedNugget = 1e-10;
constexpr double kMaxJitter = 1e-4;

struct Factor {
  RMatrix chol;
  RVector alpha;
  double jitter = 0.0;
  double lml = 0.0;
};

/// Cholesky of K + diag(noise) with escalating jitter; nullopt if even the largest jitter fails.
std::optional<Factor> factorize(const RMatrix& x, const RVector& ys, const RVector& noise, const GpHyper& h) {
  const Eigen::Index n = x.rows();
  RMatrix k(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) k(i, j) = k(j, i) = matern52(x.row(i).transpose(), x.row(j).transpose(), h);
  k.diagonal() += noise;
  for (double jitter = 0.0;; jitter = jitter == 0.0 ? 1e-10 : jitter * 10.0) {
    if (jitter > kMaxJitter * 1.0001) return std::nullopt;
    RMatrix kj = k;
    kj.diagonal().array() += jitter;
    Eigen::LLT<RMatrix> llt(kj);
    if (llt.info() != Eigen::Success) continue;
    Factor f;
    f.chol = llt.matrixL();
    f.alpha = llt.solve(ys);
    f.jitter = jitter;
    f.lml = -0.5 * ys.dot(f.alpha) - f.chol.diagonal().array().log().sum() -
            0.5 * static_cast<double>(n) * std::log(kTwoPi);
    return f;
  }
}

struct LmlProblem {
  const RMatrix* x;
  RVector ys;
  RVector se2;  ///< standardized per-point variances
  bool pinned;
  int d;
};

GpHyper decode(const gsl_vector* v, const LmlProblem& p) {
  GpHyper h;
  h.length.resize(p.d);
  for (int i = 0; i < p.d; ++i) h.length(i) = std::exp(std::clamp(gsl_vector_get(v, static_cast<std::size_t>(i)),
                                                                   std::log(kMinLength), std::log(kMaxLength)));
  h.signal_var = std::exp(std::clamp(gsl_vector_get(v, static_cast<std::size_t>(p.d)), std::log(kMinSignal),
                                     std::log(kMaxSignal)));
  h.nugget = p.pinned ? kPinnedNugget
                      : std::exp(std::clamp(gsl_vector_get(v, static_cast<std::size_t>(p.d) + 1), std::log(kMinNugget),
                                            std::log(kMaxNugget)));
  return h;
}

double negative_lml(const gsl_vector* v, void* params) {
  const auto& p = *static_cast<const LmlProblem*>(params);
  const GpHyper h = decode(v, p);
  const auto f = factorize(*p.x, p.ys, p.se2.array() + h.nugget, h);
  if (!f) return 1e300;
  // Mild log-normal prior on the length scales keeps them away from the bounds.
  double prior = 0.0;
  for (int i = 0; i < p.d; ++i) prior += 0.5 * std::pow(std::log(h.length(i) / 0.3) / 1.5, 2);
  return -f->lml + prior;
}

struct Standardized {
  double mean = 0.0, scale = 1.0;
  RVector ys, se2;
};

Standardized standardize(const RVector& y, const RVector& se) {
  Standardized s;
  s.mean = y.mean();
  const double var = y.size() > 1 ? (y.array() - s.mean).square().sum() / static_cast<double>(y.size() - 1) : 0.0;
  s.scale = var > 1e-24 ? std::sqrt(var) : 1.0;
  s.ys = (y.array() - s.mean) / s.scale;
  s.se2 = (se.array() / s.scale).square();
  return s;
}

}  // namespace

double matern52(const RVector& a, const RVector& b, const GpHyper& h) {
  const double r = ((a - b).array() / h.length.array()).matrix().norm();
  const double s5 = std::sqrt(5.0) * r;
  return h.signal_var * (1.0 + s5 + 5.0 * r * r / 3.0) * std::exp(-s5);
}

GpSurrogate::GpSurrogate(RMatrix x, RVector y, RVector std_error, GpHyper hyper)
    : x_(std::move(x)), y_(std::move(y)), se_(std::move(std_error)), hyper_(std::move(hyper)) {
  require(x_.rows() >= 1 && x_.rows() == y_.size() && se_.size() == y_.size(), "GpSurrogate: inconsistent data");
  require(hyper_.length.size() == x_.cols(), "GpSurrogate: one length scale per dimension");
  const auto s = standardize(y_, se_);
  mean_ = s.mean;
  scale_ = s.scale;
  const auto f = factorize(x_, s.ys, s.se2.array() + hyper_.nugget, hyper_);
  if (!f) fail(ErrorCategory::conditioning, "GpSurrogate: covariance not positive definite after jitter escalation");
  chol_ = f->chol;
  alpha_ = f->alpha;
  jitter_ = f->jitter;
  lml_ = f->lml;
}

GpSurrogate GpSurrogate::fit(const RMatrix& x, const RVector& y, const RVector& std_error, const GpFitOptions& opt,
                             const std::optional<GpHyper>& warm) {
  require(x.rows() >= 1 && x.rows() == y.size() && std_error.size() == y.size(), "gp_fit: inconsistent data");
  const int d = static_cast<int>(x.cols());
  const auto s = standardize(y, std_error);
  const bool pinned = opt.pin_nugget.value_or((std_error.array() == 0.0).all());
  LmlProblem p{&x, s.ys, s.se2, pinned, d};
  const int np = d + (pinned ? 1 : 2);

  std::vector<GpHyper> starts;
  if (warm && warm->length.size() == d) starts.push_back(*warm);
  const double lengths[] = {0.3, 0.1, 1.0, 0.5};
  for (int r = 0; r <= opt.restarts && r < 4; ++r)
    starts.push_back(GpHyper{RVector::Constant(d, lengths[r]), 1.0, pinned ? kPinnedNugget : 1e-3});

  gsl_multimin_function fn{&negative_lml, static_cast<std::size_t>(np), &p};
  gsl_vector* v = gsl_vector_alloc(static_cast<std::size_t>(np));
  gsl_vector* step = gsl_vector_alloc(static_cast<std::size_t>(np));
  gsl_multimin_fminimizer* m = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, static_cast<std::size_t>(np));
  gsl_vector_set_all(step, 0.7);

  GpHyper best = starts.front();
  double best_val = std::numeric_limits<double>::infinity();
  if (x.rows() >= 2) {
    for (const auto& h0 : starts) {
      for (int i = 0; i < d; ++i) gsl_vector_set(v, static_cast<std::size_t>(i), std::log(h0.length(i)));
      gsl_vector_set(v, static_cast<std::size_t>(d), std::log(h0.signal_var));
      if (!pinned) gsl_vector_set(v, static_cast<std::size_t>(d) + 1, std::log(std::max(h0.nugget, kMinNugget)));
      gsl_multimin_fminimizer_set(m, &fn, v, step);
      for (int it = 0; it < opt.max_iterations; ++it) {
        if (gsl_multimin_fminimizer_iterate(m) != GSL_SUCCESS) break;
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m), 1e-3) == GSL_SUCCESS) break;
      }
      if (m->fval < best_val) {
        best_val = m->fval;
        best = decode(m->x, p);
      }
    }
  } else {
    best.nugget = pinned ? kPinnedNugget : 1e-3;
  }
  gsl_multimin_fminimizer_free(m);
  gsl_vector_free(step);
  gsl_vector_free(v);
  return GpSurrogate(x, y, std_error, best);
}

GpPrediction GpSurrogate::predict(const RVector& u) const {
  require(u.size() == dim(), "GpSurrogate::predict: dimension mismatch");
  const Eigen::Index n = x_.rows();
  RVector k(n);
  for (Eigen::Index i = 0; i < n; ++i) k(i) = matern52(u, x_.row(i).transpose(), hyper_);
  const double ms = k.dot(alpha_);
  const RVector v = chol_.triangularView<Eigen::Lower>().solve(k);
  const double vs = std::max(0.0, hyper_.signal_var - v.squaredNorm());
  return {mean_ + scale_ * ms, scale_ * scale_ * vs};
}

}  // namespace vqgo
