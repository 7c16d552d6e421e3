// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "vqgo/scenarios/artifacts.hpp"
#include "vqgo/scenarios/common.hpp"

namespace vqgo {

/// Commands: "calibrate-phase", "calibrate-omega-c", "optimize", "tomography",
/// "drift-study", "identity-baseline".
const std::vector<std::string>& run_commands();

/// Runs `command` on `c` and writes every artifact into `out`, which must be empty: config.yaml,
/// run.json (command, seed, parameters, results), trace_<stage>.jsonl, chi files
/// and population series. `parameters` feed the tomography command (empty: the
/// scenario's reference pulse). Returns the contents of run.json.
nlohmann::json execute(const std::string& command, const ScenarioConfig& c, const std::vector<double>& parameters,
                       const RunDirectory& out, const RunHooks& hooks = {});

/// Re-executes the run recorded in `recorded` into `out` from its config.yaml and
/// run.json, then compares the two directories byte for byte. Returns the differing files.
std::vector<std::string> replay(const std::string& recorded, const std::string& out, const RunHooks& hooks = {});

}  // namespace vqgo
