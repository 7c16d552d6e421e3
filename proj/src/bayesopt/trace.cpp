// SPDX-License-Identifier: Apache-2.0
#include "vqgo/bayesopt/trace.hpp"

#include <json.hpp>

#include "vqgo/core/errors.hpp"

namespace vqgo {

using nlohmann::json;

const TraceRecord& OptimizationTrace::incumbent() const {
  require(!records.empty(), "OptimizationTrace: empty trace");
  return records.at(static_cast<std::size_t>(records.back().incumbent));
}

std::vector<double> OptimizationTrace::incumbent_history() const {
  std::vector<double> h;
  for (const auto& r : records) h.push_back(r.incumbent_value);
  return h;
}

std::string trace_line(const TraceRecord& r, const std::vector<std::string>& names) {
  json j;
  j["iteration"] = r.iteration;
  j["phase"] = r.phase;
  json params = json::object();
  for (std::size_t i = 0; i < r.x.size(); ++i) params[i < names.size() ? names[i] : "x" + std::to_string(i)] = r.x[i];
  j["params"] = params;
  j["x"] = r.x;
  j["value"] = r.value;
  j["std_error"] = r.std_error;
  j["tick"] = r.tick;
  j["failed"] = r.failed;
  if (!r.error.empty()) j["error"] = r.error;
  j["incumbent"] = r.incumbent;
  j["incumbent_value"] = r.incumbent_value;
  if (!r.extra.empty()) j["extra"] = r.extra;
  j["names"] = names;
  return j.dump();
}

TraceRecord parse_trace_line(const std::string& line, std::vector<std::string>* names) {
  TraceRecord r;
  try {
    const json j = json::parse(line);
    r.iteration = j.at("iteration").get<int>();
    r.phase = j.at("phase").get<std::string>();
    r.x = j.at("x").get<std::vector<double>>();
    r.value = j.at("value").get<double>();
    r.std_error = j.at("std_error").get<double>();
    r.tick = j.at("tick").get<long>();
    r.failed = j.at("failed").get<bool>();
    if (j.contains("error")) r.error = j["error"].get<std::string>();
    r.incumbent = j.at("incumbent").get<int>();
    r.incumbent_value = j.at("incumbent_value").get<double>();
    if (j.contains("extra")) r.extra = j["extra"].get<std::map<std::string, double>>();
    if (names) *names = j.at("names").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    fail(ErrorCategory::io, std::string("trace: malformed record: ") + e.what());
  }
  return r;
}

TraceWriter::TraceWriter(const std::string& path, std::vector<std::string> names)
    : out_(path, std::ios::app), names_(std::move(names)) {
  if (!out_) fail(ErrorCategory::io, "trace: cannot open " + path);
}

void TraceWriter::write(const TraceRecord& r) {
  out_ << trace_line(r, names_) << '\n';
  out_.flush();
}

void write_trace(const std::string& path, const OptimizationTrace& trace) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) fail(ErrorCategory::io, "trace: cannot open " + path);
  for (const auto& r : trace.records) out << trace_line(r, trace.names) << '\n';
}

OptimizationTrace read_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCategory::io, "trace: cannot open " + path);
  OptimizationTrace t;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) t.records.push_back(parse_trace_line(line, &t.names));
  return t;
}

}  // namespace vqgo
