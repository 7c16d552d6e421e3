// SPDX-License-Identifier: Apache-2.0
// Command-line front end: calibrations, scenario optimization, tomography, drift study and replay.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vqgo/core/errors.hpp"
#include "vqgo/scenarios/runner.hpp"

namespace {

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string scenario;
  std::vector<double> params;
  bool quiet = false;
};

vqgo::ScenarioConfig resolve(const Common& o, vqgo::ScenarioKind fallback) {
  using namespace vqgo;
  ScenarioConfig c;
  if (!o.config.empty()) {
    c = load_config(o.config);
    if (!o.scenario.empty() && parse_scenario(o.scenario) != c.scenario)
      fail(ErrorCategory::configuration, "--scenario " + o.scenario + " contradicts the config file's scenario " +
                                             std::string(scenario_name(c.scenario)));
  } else {
    c = default_config(o.scenario.empty() ? fallback : parse_scenario(o.scenario));
  }
  if (o.seed) c.seed = *o.seed;
  return c;
}

vqgo::RunHooks hooks(const Common& o) {
  vqgo::RunHooks h;
  if (!o.quiet) h.log = [](const std::string& m) { std::cerr << "[vqgo] " << m << std::endl; };
  return h;
}

void add_common(CLI::App* cmd, Common& o, bool scenario, bool params) {
  cmd->add_option("--config,-c", o.config, "YAML configuration file")->check(CLI::ExistingFile);
  cmd->add_option("--seed,-s", o.seed, "master seed (overrides the config)");
  cmd->add_option("--out,-o", o.out, "output directory (created; must be empty)")->required();
  cmd->add_flag("--quiet,-q", o.quiet, "no progress messages");
  if (scenario)
    cmd->add_option("--scenario", o.scenario,
                    "zx-gate | zx1-1yz-gate | floquet-zyz | identity-baseline | drift-study");
  if (params) cmd->add_option("--params", o.params, "pulse parameters of the scenario's gate")->delimiter(',');
}

int run(int argc, char** argv) {
  using namespace vqgo;
  CLI::App app{"vqgo: pulse-level variational gate optimization"};
  app.require_subcommand(1);
  Common o;
  std::string recorded, replay_out;

  struct Verb {
    const char* name;
    const char* help;
    ScenarioKind fallback;
    bool scenario;
    bool params;
  };
  const std::vector<Verb> verbs{
      {"calibrate-phase", "calibrate the phase of every cross-resonance channel", ScenarioKind::phase_calibration, false,
       false},
      {"calibrate-omega-c", "calibrate the central compensation drive of the three-transmon device",
       ScenarioKind::omega_c_calibration, false, false},
      {"optimize", "run a gate optimization scenario", ScenarioKind::zx_gate, true, false},
      {"tomography", "process tomography of a scenario gate at given parameters", ScenarioKind::zx_gate, true, true},
      {"drift-study", "tomography of fixed pulses before and after drift", ScenarioKind::drift_study, false, false},
      {"identity-baseline", "identity-gate fidelities under the calibrated readout", ScenarioKind::identity_baseline,
       false, false},
  };
  std::vector<std::pair<CLI::App*, const Verb*>> cmds;
  for (const auto& v : verbs) {
    CLI::App* cmd = app.add_subcommand(v.name, v.help);
    add_common(cmd, o, v.scenario, v.params);
    cmds.emplace_back(cmd, &v);
  }
  CLI::App* rp = app.add_subcommand("replay", "re-run a recorded run and compare its artifacts byte for byte");
  rp->add_option("--run", recorded, "recorded run directory")->required()->check(CLI::ExistingDirectory);
  rp->add_option("--out,-o", replay_out, "directory for the re-run (default: <run>.replay)");
  rp->add_flag("--quiet,-q", o.quiet, "no progress messages");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_code(ErrorCategory::invalid_argument);
  }

  if (rp->parsed()) {
    if (replay_out.empty()) replay_out = recorded + ".replay";
    const auto diff = replay(recorded, replay_out, hooks(o));
    if (!diff.empty()) {
      std::string list;
      for (const auto& f : diff) list += " " + f;
      fail(ErrorCategory::replay_mismatch, "artifacts differ:" + list);
    }
    std::cout << "replay identical: " << replay_out << "\n";
    return 0;
  }
  for (const auto& [cmd, verb] : cmds) {
    if (!cmd->parsed()) continue;
    if (std::string(verb->name) == "optimize" && o.scenario.empty() && o.config.empty())
      fail(ErrorCategory::invalid_argument, "optimize needs --scenario or --config");
    const ScenarioConfig c = resolve(o, verb->fallback);
    const RunDirectory out(o.out);
    const auto j = execute(verb->name, c, o.params, out, hooks(o));
    std::cout << "wrote " << out.path() << "\n";
    if (j.contains("fidelity")) std::cout << "fidelity " << j["fidelity"].get<double>() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const vqgo::Error& e) {
    std::cerr << "error: " << vqgo::category_name(e.category()) << ": " << e.what() << "\n";
    return vqgo::exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  }
}
