// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "vqgo/core/types.hpp"

namespace vqgo {

/// Matern-5/2 ARD kernel hyperparameters, in standardized output units.
struct GpHyper {
  RVector length;            ///< per-dimension length scales on the unit box
  double signal_var = 1.0;
  double nugget = 1e-10;     ///< learned noise variance on top of the per-point variances
};

struct GpFitOptions {
  int restarts = 3;          ///< extra fixed starting points for the likelihood search
  int max_iterations = 300;
  /// Pin the nugget to 1e-10 (exact interpolation). Defaults to true when every std error is zero.
  std::optional<bool> pin_nugget;
};

struct GpPrediction {
  double mean = 0.0;
  double var = 0.0;  ///< latent-function variance, in original output units
};

double matern52(const RVector& a, const RVector& b, const GpHyper& h);

/// Gaussian-process regression with a constant prior mean equal to the data mean,
/// a Matern-5/2 ARD kernel and heteroscedastic observation noise.
class GpSurrogate {
 public:
  /// Conditions on data with fixed hyperparameters. x rows are points in the unit box.
  GpSurrogate(RMatrix x, RVector y, RVector std_error, GpHyper hyper);

  /// Hyperparameters by type-II maximum likelihood (Nelder-Mead with restarts),
  /// optionally warm-started.
  static GpSurrogate fit(const RMatrix& x, const RVector& y, const RVector& std_error, const GpFitOptions& opt = {},
                         const std::optional<GpHyper>& warm = std::nullopt);

  int size() const { return static_cast<int>(y_.size()); }
  int dim() const { return static_cast<int>(x_.cols()); }
  const GpHyper& hyper() const { return hyper_; }
  double jitter() const { return jitter_; }
  double log_marginal_likelihood() const { return lml_; }
  double y_mean() const { return mean_; }
  double y_scale() const { return scale_; }
  const RVector& y() const { return y_; }
  const RMatrix& x() const { return x_; }

  GpPrediction predict(const RVector& u) const;

 private:
  RMatrix x_;
  RVector y_, se_;
  GpHyper hyper_;
  double mean_ = 0.0, scale_ = 1.0, jitter_ = 0.0, lml_ = 0.0;
  RMatrix chol_;  ///< lower Cholesky factor of the standardized covariance
  RVector alpha_;
};

}  // namespace vqgo
