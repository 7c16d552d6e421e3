// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

namespace vqgo {

struct TraceRecord {
  int iteration = 0;
  std::string phase;  ///< "design" or "bo"
  std::vector<double> x;
  double value = 0.0;
  double std_error = 0.0;
  long tick = 0;
  bool failed = false;  ///< value is the penalty assigned to a failed evaluation
  std::string error;
  int incumbent = 0;    ///< iteration of the best estimate so far
  double incumbent_value = 0.0;
  std::map<std::string, double> extra;
};

struct OptimizationTrace {
  std::vector<std::string> names;
  std::vector<TraceRecord> records;

  const TraceRecord& incumbent() const;
  std::vector<double> incumbent_history() const;
};

/// One self-describing JSON object per record.
std::string trace_line(const TraceRecord& r, const std::vector<std::string>& names);
TraceRecord parse_trace_line(const std::string& line, std::vector<std::string>* names = nullptr);

/// Append-only line-delimited trace file, flushed after every record.
class TraceWriter {
 public:
  TraceWriter() = default;
  TraceWriter(const std::string& path, std::vector<std::string> names);
  bool is_open() const { return out_.is_open(); }
  void write(const TraceRecord& r);

 private:
  std::ofstream out_;
  std::vector<std::string> names_;
};

void write_trace(const std::string& path, const OptimizationTrace& trace);
OptimizationTrace read_trace(const std::string& path);

}  // namespace vqgo
