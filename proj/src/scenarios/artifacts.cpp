// SPDX-License-Identifier: Apache-2.0
#include "vqgo/scenarios/artifacts.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "vqgo/core/errors.hpp"

namespace vqgo {
namespace fs = std::filesystem;

namespace {

std::string shortest(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) fail(ErrorCategory::io, "cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

RunDirectory::RunDirectory(std::string path) : path_(std::move(path)) {
  std::error_code ec;
  fs::create_directories(path_, ec);
  if (ec || !fs::is_directory(path_)) fail(ErrorCategory::io, "cannot create run directory " + path_);
}

std::string RunDirectory::file(const std::string& name) const { return (fs::path(path_) / name).string(); }

bool RunDirectory::exists(const std::string& name) const { return fs::exists(file(name)); }

bool RunDirectory::empty() const { return fs::is_empty(path_); }

void RunDirectory::write_text(const std::string& name, const std::string& content) const {
  std::error_code ec;
  std::filesystem::create_directories(std::filesystem::path(file(name)).parent_path(), ec);
  std::ofstream out(file(name), std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCategory::io, "cannot write " + file(name));
  out << content;
  if (!out) fail(ErrorCategory::io, "write failed: " + file(name));
}

std::string RunDirectory::read_text(const std::string& name) const { return slurp(file(name)); }

void RunDirectory::write_json(const std::string& name, const nlohmann::json& j) const {
  write_text(name, j.dump(2) + "\n");
}

nlohmann::json RunDirectory::read_json(const std::string& name) const {
  try {
    return nlohmann::json::parse(read_text(name));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCategory::io, "malformed JSON in " + file(name) + ": " + e.what());
  }
}

void RunDirectory::write_config(const ScenarioConfig& c) const { write_text("config.yaml", dump_config(c)); }

ScenarioConfig RunDirectory::read_config() const { return load_config(file("config.yaml")); }

void RunDirectory::write_chi(const std::string& name, const ProcessMatrix& p, const Metadata& meta) const {
  write_chi_file(file(name), p, meta);
}

void RunDirectory::write_populations(const std::string& name, const FloquetPopulations& p) const {
  write_text(name, populations_csv(p));
}

void RunDirectory::write_trace(const std::string& name, const OptimizationTrace& t) const {
  vqgo::write_trace(file(name), t);
}

std::string populations_csv(const FloquetPopulations& p) {
  require(p.time.size() == p.plus.size() && p.time.size() == p.minus.size(), "populations_csv: ragged series");
  std::string out = "time,P(+++),P(---)\n";
  for (std::size_t k = 0; k < p.time.size(); ++k)
    out += shortest(p.time[k]) + "," + shortest(p.plus[k]) + "," + shortest(p.minus[k]) + "\n";
  return out;
}

FloquetPopulations parse_populations_csv(const std::string& text) {
  FloquetPopulations p;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "time,P(+++),P(---)") fail(ErrorCategory::io, "populations: bad header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double v[3];
    const char* b = line.data();
    const char* e = b + line.size();
    for (int k = 0; k < 3; ++k) {
      const auto r = std::from_chars(b, e, v[k]);
      if (r.ec != std::errc{}) fail(ErrorCategory::io, "populations: bad number in '" + line + "'");
      b = r.ptr;
      if (k < 2) {
        if (b == e || *b != ',') fail(ErrorCategory::io, "populations: expected three columns in '" + line + "'");
        ++b;
      }
    }
    if (b != e) fail(ErrorCategory::io, "populations: trailing data in '" + line + "'");
    p.time.push_back(v[0]);
    p.plus.push_back(v[1]);
    p.minus.push_back(v[2]);
  }
  return p;
}

std::vector<std::string> compare_runs(const std::string& a, const std::string& b) {
  auto files = [](const std::string& root) {
    std::set<std::string> out;
    if (!fs::is_directory(root)) fail(ErrorCategory::io, "not a run directory: " + root);
    for (const auto& e : fs::recursive_directory_iterator(root))
      if (e.is_regular_file()) out.insert(fs::relative(e.path(), root).generic_string());
    return out;
  };
  const auto fa = files(a), fb = files(b);
  std::set<std::string> all = fa;
  all.insert(fb.begin(), fb.end());
  std::vector<std::string> diff;
  for (const auto& f : all) {
    if (!fa.count(f) || !fb.count(f) || slurp(fs::path(a) / f) != slurp(fs::path(b) / f)) diff.push_back(f);
  }
  return diff;
}

}  // namespace vqgo
