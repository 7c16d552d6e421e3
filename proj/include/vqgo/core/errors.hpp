// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vqgo {

/// Machine-readable failure classes. The CLI maps each to its own exit code.
enum class ErrorCategory {
  invalid_argument,
  configuration,
  calibration,
  conditioning,
  leakage,
  degenerate_fit,
  io,
  replay_mismatch,
};

std::string_view category_name(ErrorCategory c) noexcept;
int exit_code(ErrorCategory c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

[[noreturn]] inline void fail(ErrorCategory c, const std::string& what) { throw Error(c, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCategory::invalid_argument, what);
}

}  // namespace vqgo
