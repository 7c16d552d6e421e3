// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "vqgo/bayesopt/trace.hpp"
#include "vqgo/device/floquet.hpp"
#include "vqgo/scenarios/config.hpp"
#include "vqgo/tomography/chi_io.hpp"

namespace vqgo {

/// Output directory of one run. Every writer produces byte-identical files for identical inputs.
class RunDirectory {
 public:
  /// Creates the directory if needed; raises io errors.
  explicit RunDirectory(std::string path);

  const std::string& path() const { return path_; }
  std::string file(const std::string& name) const;
  bool exists(const std::string& name) const;
  bool empty() const;

  void write_text(const std::string& name, const std::string& content) const;
  std::string read_text(const std::string& name) const;
  void write_json(const std::string& name, const nlohmann::json& j) const;
  nlohmann::json read_json(const std::string& name) const;
  /// config.yaml: the effective configuration, seed included.
  void write_config(const ScenarioConfig& c) const;
  ScenarioConfig read_config() const;
  void write_chi(const std::string& name, const ProcessMatrix& p, const Metadata& meta = {}) const;
  void write_populations(const std::string& name, const FloquetPopulations& p) const;
  void write_trace(const std::string& name, const OptimizationTrace& t) const;

 private:
  std::string path_;
};

/// Columns: time (s), P(+++), P(---); shortest round-trip decimal representation.
std::string populations_csv(const FloquetPopulations& p);
FloquetPopulations parse_populations_csv(const std::string& text);

/// Relative paths of regular files that differ between two run directories
/// (present in one only, or different bytes). Empty when the runs match.
std::vector<std::string> compare_runs(const std::string& a, const std::string& b);

}  // namespace vqgo
