// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "vqgo/core/types.hpp"

namespace vqgo {

struct Parameter {
  std::string name;
  double lower = 0.0;
  double upper = 1.0;
  std::string unit;
};

/// Box of named parameters. Optimizers work on the unit cube and map back through from_unit.
class SearchSpace {
 public:
  SearchSpace() = default;
  explicit SearchSpace(std::vector<Parameter> params);

  int dim() const { return static_cast<int>(params_.size()); }
  const std::vector<Parameter>& parameters() const { return params_; }
  const Parameter& operator[](int i) const { return params_.at(static_cast<std::size_t>(i)); }
  int index_of(const std::string& name) const;
  std::vector<std::string> names() const;

  RVector to_unit(const RVector& x) const;
  RVector from_unit(const RVector& u) const;
  bool contains(const RVector& x) const;

 private:
  std::vector<Parameter> params_;
};

/// Scrambled Sobol points in [0, 1)^d: GSL's sequence with a seeded Cranley-Patterson shift.
class SobolSequence {
 public:
  SobolSequence(int dim, std::uint64_t seed);
  ~SobolSequence();
  SobolSequence(const SobolSequence&) = delete;
  SobolSequence& operator=(const SobolSequence&) = delete;
  RVector next();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace vqgo
