// SPDX-License-Identifier: Apache-2.0
#include "vqgo/bayesopt/search_space.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <gsl/gsl_qrng.h>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/rng.hpp"

namespace vqgo {

SearchSpace::SearchSpace(std::vector<Parameter> params) : params_(std::move(params)) {
  require(!params_.empty(), "SearchSpace: no parameters");
  std::set<std::string> seen;
  for (const auto& p : params_) {
    require(std::isfinite(p.lower) && std::isfinite(p.upper) && p.lower < p.upper,
            "SearchSpace: bad bounds for " + p.name);
    require(seen.insert(p.name).second, "SearchSpace: duplicate parameter " + p.name);
  }
}

int SearchSpace::index_of(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (params_[static_cast<std::size_t>(i)].name == name) return i;
  fail(ErrorCategory::invalid_argument, "SearchSpace: unknown parameter " + name);
}

std::vector<std::string> SearchSpace::names() const {
  std::vector<std::string> n;
  for (const auto& p : params_) n.push_back(p.name);
  return n;
}

RVector SearchSpace::to_unit(const RVector& x) const {
  require(x.size() == dim(), "SearchSpace: dimension mismatch");
  RVector u(dim());
  for (int i = 0; i < dim(); ++i) {
    const auto& p = params_[static_cast<std::size_t>(i)];
    u(i) = (x(i) - p.lower) / (p.upper - p.lower);
  }
  return u;
}

RVector SearchSpace::from_unit(const RVector& u) const {
  require(u.size() == dim(), "SearchSpace: dimension mismatch");
  RVector x(dim());
  for (int i = 0; i < dim(); ++i) {
    const auto& p = params_[static_cast<std::size_t>(i)];
    const double c = std::clamp(u(i), 0.0, 1.0);
    x(i) = std::clamp(p.lower + c * (p.upper - p.lower), p.lower, p.upper);
  }
  return x;
}

bool SearchSpace::contains(const RVector& x) const {
  if (x.size() != dim()) return false;
  for (int i = 0; i < dim(); ++i) {
    const auto& p = params_[static_cast<std::size_t>(i)];
    if (!(x(i) >= p.lower && x(i) <= p.upper)) return false;
  }
  return true;
}

struct SobolSequence::Impl {
  gsl_qrng* q = nullptr;
  RVector shift;
  std::vector<double> buf;
};

SobolSequence::SobolSequence(int dim, std::uint64_t seed) : impl_(std::make_unique<Impl>()) {
  require(dim >= 1 && dim <= 40, "SobolSequence: dimension must lie in [1, 40]");
  impl_->q = gsl_qrng_alloc(gsl_qrng_sobol, static_cast<unsigned>(dim));
  if (!impl_->q) fail(ErrorCategory::configuration, "SobolSequence: allocation failed");
  impl_->buf.resize(static_cast<std::size_t>(dim));
  impl_->shift.resize(dim);
  for (int i = 0; i < dim; ++i)
    impl_->shift(i) = static_cast<double>(derive_seed(seed, {static_cast<std::uint64_t>(i)}) >> 11) * 0x1.0p-53;
}

SobolSequence::~SobolSequence() {
  if (impl_ && impl_->q) gsl_qrng_free(impl_->q);
}

RVector SobolSequence::next() {
  gsl_qrng_get(impl_->q, impl_->buf.data());
  RVector u(impl_->shift.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const double v = impl_->buf[static_cast<std::size_t>(i)] + impl_->shift(i);
    u(i) = v - std::floor(v);
  }
  return u;
}

}  // namespace vqgo
