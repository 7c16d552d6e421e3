// SPDX-License-Identifier: Apache-2.0
#include "vqgo/scenarios/runner.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/rng.hpp"
#include "vqgo/device/full_model.hpp"
#include "vqgo/scenarios/calibration.hpp"
#include "vqgo/scenarios/drift_study.hpp"
#include "vqgo/scenarios/floquet_scenario.hpp"
#include "vqgo/scenarios/identity.hpp"
#include "vqgo/scenarios/three_qubit.hpp"
#include "vqgo/scenarios/zx.hpp"

namespace vqgo {
namespace {

using nlohmann::json;

json readout_json(const ReadoutModel& r) {
  return {{"p01", r.p01}, {"p10", r.p10}};
}

Metadata chi_meta(const ScenarioConfig& c, const std::string& what) {
  return {{"scenario", std::string(scenario_name(c.scenario))}, {"seed", std::to_string(c.seed)}, {"gate", what}};
}

/// Writes trace records as they arrive, one file per optimization stage.
struct LiveTraces {
  const RunDirectory& dir;
  std::map<std::string, std::unique_ptr<TraceWriter>> writers;

  RunHooks wrap(const RunHooks& user) {
    RunHooks h = user;
    h.on_record = [this, user](const std::string& stage, const std::vector<std::string>& names, const TraceRecord& r) {
      auto& w = writers[stage];
      if (!w) w = std::make_unique<TraceWriter>(dir.file("trace_" + stage + ".jsonl"), names);
      w->write(r);
      if (user.on_record) user.on_record(stage, names, r);
    };
    return h;
  }
};

json gate_run_json(const ScenarioConfig& c, const GateRun& run, const RunDirectory& out) {
  json j;
  json params = json::object();
  for (std::size_t k = 0; k < run.parameters.size(); ++k) params[run.parameter_names[k]] = run.parameters[k];
  j["parameters"] = params;
  j["parameter_values"] = run.parameters;
  j["fidelity"] = run.fidelity;
  j["exact_fidelity"] = run.exact_fidelity;
  j["readout"] = readout_json(run.readout);
  j["summary"] = run.summary;
  json cals = json::array();
  for (const auto& cal : run.calibrations) cals.push_back(to_json(cal));
  j["calibrations"] = cals;
  json stages = json::array();
  for (const auto& [name, trace] : run.traces) {
    stages.push_back({{"stage", name},
                      {"file", "trace_" + name + ".jsonl"},
                      {"evaluations", trace.records.size()},
                      {"incumbent", trace.incumbent().iteration},
                      {"incumbent_value", trace.incumbent().incumbent_value}});
  }
  j["stages"] = stages;
  out.write_chi("chi.txt", run.chi, chi_meta(c, "final"));
  for (const auto& [name, p] : run.populations) out.write_populations("populations_" + name + ".csv", p);
  return j;
}

GateRun run_optimize(const ScenarioConfig& c, const RunHooks& hooks) {
  switch (c.scenario) {
    case ScenarioKind::zx_gate:
      return run_zx_scenario(c, hooks);
    case ScenarioKind::zx1_1yz_gate:
      return run_zx1_1yz_scenario(c, hooks);
    case ScenarioKind::floquet_zyz:
      return run_floquet_scenario(c, hooks);
    default:
      fail(ErrorCategory::configuration,
           "optimize: scenario " + std::string(scenario_name(c.scenario)) + " has no optimization");
  }
}

json run_tomography(const ScenarioConfig& c, const std::vector<double>& params, const RunDirectory& out) {
  CMatrix gate, target;
  json j;
  std::vector<CalibrationResult> cals;
  int n = 0;
  switch (c.scenario) {
    case ScenarioKind::zx_gate: {
      require(params.size() == 3, "tomography: zx-gate takes d1, d2x, vz");
      const CrSetup s = cr_setup(c, 0, 1);
      const CalibrationResult cal = calibrate_phase(s, phase_calibration_options(c, derive_seed(c.seed, {1})));
      cals.push_back(cal);
      CrParams p{params[0], params[1], 0.0, params[2], cal.values.at("phase")};
      gate = cr_gate(s, p);
      target = zx_target(zx_prescan(s, p.phase, c.pulse.prescan_points).sign);
      n = 2;
      break;
    }
    case ScenarioKind::zx1_1yz_gate: {
      require(params.size() == 6, "tomography: zx1-1yz-gate takes d1, vz1, d3, vz3, central, central_phase");
      const ThreeQubitSetup s = calibrate_three_qubit_setup(c, &cals);
      gate = three_qubit_gate(s, {params[0], params[1], params[2], params[3], params[4], params[5]});
      target = zx1_1yz_target();
      n = 3;
      break;
    }
    case ScenarioKind::floquet_zyz:
    case ScenarioKind::drift_study: {
      const FloquetConfig& f = c.floquet;
      RVector x(4);
      if (params.empty())
        x << f.weights_mhz.at(0), f.weights_mhz.at(1), f.weights_mhz.at(2), f.omega_c_mhz;
      else {
        require(params.size() == 4, "tomography: floquet takes omega0, omega1, omega2, omega_c (MHz)");
        x << params[0], params[1], params[2], params[3];
      }
      gate = floquet_tier_at(f, x, floquet_drift(scenario_drift(c, 0))).propagate(0.0, f.drive().duration());
      target = floquet_target(f);
      n = 3;
      break;
    }
    case ScenarioKind::identity_baseline:
      n = static_cast<int>(c.device.freq_mhz.size());
      gate = target = CMatrix::Identity(1 << n, 1 << n);
      break;
    default:
      fail(ErrorCategory::configuration,
           "tomography: scenario " + std::string(scenario_name(c.scenario)) + " has no gate");
  }
  const ReadoutModel readout = scenario_readout(c, n);
  const ProcessMatrix chi = gate_tomography(gate, readout, c.tomography.shots, derive_seed(c.seed, {4}));
  out.write_chi("chi.txt", chi, chi_meta(c, "tomography"));
  json cj = json::array();
  for (const auto& cal : cals) cj.push_back(to_json(cal));
  j["calibrations"] = cj;
  j["parameter_values"] = params;
  j["fidelity"] = process_fidelity(chi, chi_from_unitary(target));
  j["exact_fidelity"] = unitary_fidelity(gate, target);
  j["readout"] = readout_json(readout);
  return j;
}

}  // namespace

const std::vector<std::string>& run_commands() {
  static const std::vector<std::string> c{"calibrate-phase", "calibrate-omega-c", "optimize",
                                          "tomography",      "drift-study",       "identity-baseline"};
  return c;
}

json execute(const std::string& command, const ScenarioConfig& c, const std::vector<double>& parameters,
             const RunDirectory& out, const RunHooks& hooks) {
  const auto& cmds = run_commands();
  if (std::find(cmds.begin(), cmds.end(), command) == cmds.end())
    fail(ErrorCategory::invalid_argument, "unknown command '" + command + "'");
  c.validate();
  if (!out.empty()) fail(ErrorCategory::io, "output directory " + out.path() + " is not empty");
  out.write_config(c);
  json j;
  j["command"] = command;
  j["scenario"] = std::string(scenario_name(c.scenario));
  j["seed"] = c.seed;
  j["input_parameters"] = parameters;

  LiveTraces live{out, {}};
  const RunHooks h = live.wrap(hooks);
  if (command == "calibrate-phase") {
    const int n = static_cast<int>(c.device.freq_mhz.size());
    json cals = json::array();
    bool ok = true;
    for (int control = 0; control < n; ++control)
      for (int target : {control - 1, control + 1}) {
        if (target < 0 || target >= n) continue;
        CrSetup s = cr_setup(c, control, target);
        s.channel = "cr" + std::to_string(control + 1) + std::to_string(target + 1);
        CalibrationResult r = calibrate_phase(
            s, phase_calibration_options(c, derive_seed(c.seed, {1, static_cast<std::uint64_t>(control),
                                                                 static_cast<std::uint64_t>(target)})));
        r.name = "phase_" + s.channel;
        ok = ok && r.ok;
        cals.push_back(to_json(r));
      }
    j["calibrations"] = cals;
    j["ok"] = ok;
  } else if (command == "calibrate-omega-c") {
    const FullModel model(c.transmon.model());
    j["calibrations"] = json::array({to_json(calibrate_omega_c(model, c.omega_c))});
  } else if (command == "optimize") {
    const GateRun run = run_optimize(c, h);
    j.update(gate_run_json(c, run, out));
  } else if (command == "tomography") {
    j.update(run_tomography(c, parameters, out));
  } else if (command == "drift-study") {
    const DriftStudyResult r = run_drift_study(c, h);
    out.write_chi("chi_floquet_before.txt", r.floquet.before, chi_meta(c, "floquet, tick 0"));
    out.write_chi("chi_floquet_after.txt", r.floquet.after, chi_meta(c, "floquet, tick " + std::to_string(r.ticks)));
    out.write_chi("chi_static_zx_before.txt", r.static_zx.before, chi_meta(c, "static zx, tick 0"));
    out.write_chi("chi_static_zx_after.txt", r.static_zx.after, chi_meta(c, "static zx, tick " + std::to_string(r.ticks)));
    j["summary"] = r.summary;
  } else {
    const IdentityBaseline r = run_identity_baseline(c, h);
    out.write_chi("chi_identity_2q.txt", r.chi2, chi_meta(c, "identity, 2 qubits"));
    out.write_chi("chi_identity_3q.txt", r.chi3, chi_meta(c, "identity, 3 qubits"));
    j["readout_p"] = r.p;
    j["fidelity2"] = r.fidelity2;
    j["fidelity3"] = r.fidelity3;
    j["sampled_fidelity2"] = r.sampled_fidelity2;
    j["sampled_fidelity3"] = r.sampled_fidelity3;
  }
  out.write_json("run.json", j);
  return j;
}

std::vector<std::string> replay(const std::string& recorded, const std::string& out, const RunHooks& hooks) {
  const RunDirectory src(recorded);
  const ScenarioConfig c = src.read_config();
  const json j = src.read_json("run.json");
  std::vector<double> params;
  try {
    params = j.at("input_parameters").get<std::vector<double>>();
    const RunDirectory dst(out);
    execute(j.at("command").get<std::string>(), c, params, dst, hooks);
  } catch (const json::exception& e) {
    fail(ErrorCategory::io, "run.json in " + recorded + " is incomplete: " + e.what());
  }
  return compare_runs(recorded, out);
}

}  // namespace vqgo
