// SPDX-License-Identifier: Apache-2.0
#include "vqgo/core/errors.hpp"

namespace vqgo {

std::string_view category_name(ErrorCategory c) noexcept {
  switch (c) {
    case ErrorCategory::invalid_argument: return "invalid-argument";
    case ErrorCategory::configuration: return "configuration";
    case ErrorCategory::calibration: return "calibration";
    case ErrorCategory::conditioning: return "conditioning";
    case ErrorCategory::leakage: return "leakage";
    case ErrorCategory::degenerate_fit: return "degenerate-fit";
    case ErrorCategory::io: return "io";
    case ErrorCategory::replay_mismatch: return "replay-mismatch";
  }
  return "unknown";
}

int exit_code(ErrorCategory c) noexcept {
  switch (c) {
    case ErrorCategory::invalid_argument: return 2;
    case ErrorCategory::configuration: return 3;
    case ErrorCategory::calibration: return 4;
    case ErrorCategory::conditioning: return 5;
    case ErrorCategory::leakage: return 6;
    case ErrorCategory::degenerate_fit: return 7;
    case ErrorCategory::io: return 8;
    case ErrorCategory::replay_mismatch: return 9;
  }
  return 1;
}

}  // namespace vqgo
