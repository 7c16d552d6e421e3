// SPDX-License-Identifier: Apache-2.0
#include "vqgo/scenarios/config.hpp"

#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "vqgo/core/errors.hpp"
#include "vqgo/device/units.hpp"

namespace vqgo {
namespace {

constexpr std::pair<ScenarioKind, std::string_view> kScenarioNames[] = {
    {ScenarioKind::phase_calibration, "phase-calibration"},
    {ScenarioKind::omega_c_calibration, "omega-c-calibration"},
    {ScenarioKind::zx_gate, "zx-gate"},
    {ScenarioKind::zx1_1yz_gate, "zx1-1yz-gate"},
    {ScenarioKind::floquet_zyz, "floquet-zyz"},
    {ScenarioKind::identity_baseline, "identity-baseline"},
    {ScenarioKind::drift_study, "drift-study"},
};

template <typename T>
void read(const YAML::Node& n, const char* key, T& out) {
  if (!n || !n[key]) return;
  try {
    out = n[key].as<T>();
  } catch (const YAML::Exception& e) {
    fail(ErrorCategory::configuration, std::string("config: bad value for '") + key + "': " + e.what());
  }
}

void read_optional(const YAML::Node& n, const char* key, std::optional<double>& out) {
  if (!n || !n[key]) return;
  if (n[key].IsNull()) {
    out.reset();
    return;
  }
  double v = 0.0;
  read(n, key, v);
  out = v;
}

void check_keys(const YAML::Node& n, std::initializer_list<std::string_view> allowed, const std::string& where) {
  if (!n) return;
  if (!n.IsMap()) fail(ErrorCategory::configuration, "config: section '" + where + "' must be a map");
  for (const auto& kv : n) {
    const auto k = kv.first.as<std::string>();
    bool ok = false;
    for (auto a : allowed) ok = ok || a == k;
    if (!ok) fail(ErrorCategory::configuration, "config: unknown key '" + k + "' in " + where);
  }
}

}  // namespace

std::string_view scenario_name(ScenarioKind k) noexcept {
  for (const auto& [kind, name] : kScenarioNames)
    if (kind == k) return name;
  return "unknown";
}

ScenarioKind parse_scenario(std::string_view name) {
  for (const auto& [kind, n] : kScenarioNames)
    if (n == name) return kind;
  fail(ErrorCategory::configuration, "unknown scenario '" + std::string(name) + "'");
}

std::string_view figure_of_merit_name(FigureOfMerit f) noexcept {
  switch (f) {
    case FigureOfMerit::reduced_chi: return "reduced-chi";
    case FigureOfMerit::zero_fidelity: return "zero-fidelity";
    case FigureOfMerit::exact: return "exact";
  }
  return "unknown";
}

FigureOfMerit parse_figure_of_merit(std::string_view name) {
  for (auto f : {FigureOfMerit::reduced_chi, FigureOfMerit::zero_fidelity, FigureOfMerit::exact})
    if (figure_of_merit_name(f) == name) return f;
  fail(ErrorCategory::configuration, "unknown figure of merit '" + std::string(name) + "'");
}

QubitModel QubitDeviceConfig::model() const {
  QubitModel m;
  for (double f : freq_mhz) m.freq.push_back(units::mhz(f));
  for (double j : coupling_mhz) m.coupling.push_back(units::mhz(j));
  return m;
}

DeviceModel TransmonDeviceConfig::model() const {
  DeviceModel d;
  for (double w : omega_h_mhz) d.omega_h.push_back(units::mhz(w));
  d.epsilon = epsilon;
  for (double j : coupling_mhz) d.coupling.push_back(units::mhz(j));
  d.levels = levels;
  d.global_truncation = global_truncation;
  d.fock_dim = fock_dim;
  return d;
}

LineDistortion DistortionConfig::model() const {
  return {lines, kappa, units::mhz(threshold_mhz)};
}

DriftProcess DriftConfig::process(std::uint64_t seed) const {
  return {units::mhz(1e-3 * frequency_step_khz), coupling_step, line_phase_step, tick_s, seed};
}

FloquetDrive FloquetConfig::drive() const {
  std::vector<double> w;
  for (double x : weights_mhz) w.push_back(units::mhz(x));
  return make_floquet_drive(w, units::mhz(omega_mhz), periods);
}

FloquetQubitTier FloquetConfig::tier() const {
  FloquetQubitTier t;
  t.c_zx = units::mhz(c_zx_mhz);
  t.c_xz = units::mhz(c_xz_mhz);
  t.c_x1 = units::mhz(c_x1_mhz);
  t.c_x3 = units::mhz(c_x3_mhz);
  t.zz_12 = units::mhz(zz12_mhz);
  t.zz_23 = units::mhz(zz23_mhz);
  t.omega_c = units::mhz(omega_c_mhz);
  t.drive = drive();
  return t;
}

void ScenarioConfig::validate() const {
  auto cfg = [](bool ok, const std::string& what) {
    if (!ok) fail(ErrorCategory::configuration, "config: " + what);
  };
  cfg(device.freq_mhz.size() >= 1 && device.coupling_mhz.size() + 1 == device.freq_mhz.size(),
      "device needs one coupling per adjacent qubit pair");
  cfg(pulse.duration_ns > 0 && pulse.sample_period_ns > 0, "pulse duration and sample period must be positive");
  cfg(pulse.cr_max_mhz > 0 && pulse.drive_max_mhz > 0, "pulse amplitudes must be positive");
  cfg(pulse.prescan_points >= 2, "prescan needs at least two points");
  cfg(optimizer.budget >= 1 && optimizer.stage1_budget >= 1 && optimizer.stage2_budget >= 1, "budgets must be positive");
  cfg(tomography.shots >= 0 && tomography.zf_shots >= 0 && tomography.zf_samples >= 1, "bad tomography budgets");
  cfg(floquet.lower_mhz.size() == 4 && floquet.upper_mhz.size() == 4, "floquet bounds need four entries");
  cfg(!noise.readout.baseline || (*noise.readout.baseline > 0.5 && *noise.readout.baseline <= 1.0),
      "readout baseline must lie in (0.5, 1]");
  cfg(noise.readout.p >= 0 && noise.readout.p < 0.5, "readout p must lie in [0, 0.5)");
  cfg(drift_study.ticks >= 0, "drift ticks must be non-negative");
  if (scenario == ScenarioKind::floquet_zyz || scenario == ScenarioKind::zx1_1yz_gate)
    cfg(figure_of_merit != FigureOfMerit::reduced_chi, "reduced-chi applies only to targets in the ZX span");
  transmon.model().validate();
  noise.distortion.model().validate();
}

ScenarioConfig default_config(ScenarioKind k) {
  ScenarioConfig c;
  c.scenario = k;
  c.device = {{5236.6, 5014.2}, {5.0}};
  switch (k) {
    case ScenarioKind::phase_calibration:
    case ScenarioKind::zx_gate:
      c.figure_of_merit = FigureOfMerit::reduced_chi;
      break;
    case ScenarioKind::zx1_1yz_gate:
      c.device = {{5236.6, 5014.2, 5177.2}, {5.0, 5.0}};
      c.figure_of_merit = FigureOfMerit::zero_fidelity;
      break;
    case ScenarioKind::floquet_zyz:
    case ScenarioKind::drift_study:
      c.device = {{5236.6, 5014.2, 5177.2}, {1.955, 2.052}};
      c.figure_of_merit = FigureOfMerit::zero_fidelity;
      c.optimizer.budget = 120;
      c.noise.drift.frequency_step_khz = 0.3;
      c.noise.drift.coupling_step = 0.002;
      c.noise.drift.line_phase_step = 0.02;
      c.noise.drift_enabled = k == ScenarioKind::drift_study;
      break;
    case ScenarioKind::identity_baseline:
      c.device = {{5236.6, 5014.2, 5177.2}, {1.955, 2.052}};
      c.figure_of_merit = FigureOfMerit::exact;
      c.noise.readout.baseline = 0.95;
      break;
    case ScenarioKind::omega_c_calibration:
      c.device = {{5236.6, 5014.2, 5177.2}, {1.955, 2.052}};
      c.figure_of_merit = FigureOfMerit::exact;
      break;
  }
  return c;
}

ScenarioConfig parse_config(const std::string& yaml) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml);
  } catch (const YAML::Exception& e) {
    fail(ErrorCategory::configuration, std::string("config: YAML parse error: ") + e.what());
  }
  if (!root || !root.IsMap()) fail(ErrorCategory::configuration, "config: top level must be a map");
  check_keys(root, {"scenario", "seed", "figure_of_merit", "device", "transmon", "pulse", "noise", "optimizer",
                    "tomography", "floquet", "drift_study", "omega_c"},
             "top level");
  if (!root["scenario"]) fail(ErrorCategory::configuration, "config: missing 'scenario'");
  ScenarioConfig c = default_config(parse_scenario(root["scenario"].as<std::string>()));
  read(root, "seed", c.seed);
  if (root["figure_of_merit"]) c.figure_of_merit = parse_figure_of_merit(root["figure_of_merit"].as<std::string>());

  const auto dev = root["device"];
  check_keys(dev, {"qubit_freq_mhz", "coupling_mhz"}, "device");
  read(dev, "qubit_freq_mhz", c.device.freq_mhz);
  read(dev, "coupling_mhz", c.device.coupling_mhz);

  const auto tr = root["transmon"];
  check_keys(tr, {"omega_h_mhz", "epsilon", "coupling_mhz", "levels", "global_truncation", "fock_dim"}, "transmon");
  read(tr, "omega_h_mhz", c.transmon.omega_h_mhz);
  read(tr, "epsilon", c.transmon.epsilon);
  read(tr, "coupling_mhz", c.transmon.coupling_mhz);
  read(tr, "levels", c.transmon.levels);
  read(tr, "global_truncation", c.transmon.global_truncation);
  read(tr, "fock_dim", c.transmon.fock_dim);

  const auto pu = root["pulse"];
  check_keys(pu, {"duration_ns", "sample_period_ns", "ramp_samples", "cr_max_mhz", "drive_max_mhz", "prescan_points",
                  "calibration_amplitude", "calibration_budget"},
             "pulse");
  read(pu, "duration_ns", c.pulse.duration_ns);
  read(pu, "sample_period_ns", c.pulse.sample_period_ns);
  read(pu, "ramp_samples", c.pulse.ramp_samples);
  read(pu, "cr_max_mhz", c.pulse.cr_max_mhz);
  read(pu, "drive_max_mhz", c.pulse.drive_max_mhz);
  read(pu, "prescan_points", c.pulse.prescan_points);
  read(pu, "calibration_amplitude", c.pulse.calibration_amplitude);
  read(pu, "calibration_budget", c.pulse.calibration_budget);

  const auto no = root["noise"];
  check_keys(no, {"readout", "distortion", "drift", "drift_enabled"}, "noise");
  if (no) {
    const auto ro = no["readout"];
    check_keys(ro, {"baseline", "baseline_qubits", "p"}, "noise.readout");
    read_optional(ro, "baseline", c.noise.readout.baseline);
    read(ro, "baseline_qubits", c.noise.readout.baseline_qubits);
    read(ro, "p", c.noise.readout.p);
    const auto di = no["distortion"];
    check_keys(di, {"lines", "kappa", "threshold_mhz"}, "noise.distortion");
    if (di) {
      if (const auto lines = di["lines"]) {
        for (const auto& kv : lines) {
          LineError e;
          check_keys(kv.second, {"phase", "scale"}, "noise.distortion.lines");
          read(kv.second, "phase", e.phase);
          read(kv.second, "scale", e.scale);
          c.noise.distortion.lines[kv.first.as<std::string>()] = e;
        }
      }
      read(di, "kappa", c.noise.distortion.kappa);
      read(di, "threshold_mhz", c.noise.distortion.threshold_mhz);
    }
    const auto dr = no["drift"];
    check_keys(dr, {"frequency_step_khz", "coupling_step", "line_phase_step", "tick_s"}, "noise.drift");
    read(dr, "frequency_step_khz", c.noise.drift.frequency_step_khz);
    read(dr, "coupling_step", c.noise.drift.coupling_step);
    read(dr, "line_phase_step", c.noise.drift.line_phase_step);
    read(dr, "tick_s", c.noise.drift.tick_s);
    read(no, "drift_enabled", c.noise.drift_enabled);
  }

  const auto op = root["optimizer"];
  check_keys(op, {"budget", "design_fraction", "stage1_budget", "stage2_budget"}, "optimizer");
  read(op, "budget", c.optimizer.budget);
  read(op, "design_fraction", c.optimizer.design_fraction);
  read(op, "stage1_budget", c.optimizer.stage1_budget);
  read(op, "stage2_budget", c.optimizer.stage2_budget);

  const auto to = root["tomography"];
  check_keys(to, {"shots", "zf_samples", "zf_shots"}, "tomography");
  read(to, "shots", c.tomography.shots);
  read(to, "zf_samples", c.tomography.zf_samples);
  read(to, "zf_shots", c.tomography.zf_shots);

  const auto fl = root["floquet"];
  check_keys(fl, {"weights_mhz", "omega_mhz", "periods", "c_zx_mhz", "c_xz_mhz", "c_x1_mhz", "c_x3_mhz", "zz12_mhz",
                  "zz23_mhz", "omega_c_mhz", "lower_mhz", "upper_mhz", "resolution_ns", "full_tier", "omega1_mhz",
                  "omega3_mhz", "device_omega_c_mhz"},
             "floquet");
  read(fl, "weights_mhz", c.floquet.weights_mhz);
  read(fl, "omega_mhz", c.floquet.omega_mhz);
  read(fl, "periods", c.floquet.periods);
  read(fl, "c_zx_mhz", c.floquet.c_zx_mhz);
  read(fl, "c_xz_mhz", c.floquet.c_xz_mhz);
  read(fl, "c_x1_mhz", c.floquet.c_x1_mhz);
  read(fl, "c_x3_mhz", c.floquet.c_x3_mhz);
  read(fl, "zz12_mhz", c.floquet.zz12_mhz);
  read(fl, "zz23_mhz", c.floquet.zz23_mhz);
  read(fl, "omega_c_mhz", c.floquet.omega_c_mhz);
  read(fl, "lower_mhz", c.floquet.lower_mhz);
  read(fl, "upper_mhz", c.floquet.upper_mhz);
  read(fl, "resolution_ns", c.floquet.resolution_ns);
  read(fl, "full_tier", c.floquet.full_tier);
  read(fl, "omega1_mhz", c.floquet.omega1_mhz);
  read(fl, "omega3_mhz", c.floquet.omega3_mhz);
  read(fl, "device_omega_c_mhz", c.floquet.device_omega_c_mhz);

  const auto ds = root["drift_study"];
  check_keys(ds, {"ticks", "shots", "zx_angle"}, "drift_study");
  read(ds, "ticks", c.drift_study.ticks);
  read(ds, "shots", c.drift_study.shots);
  read(ds, "zx_angle", c.drift_study.zx_angle);

  const auto oc = root["omega_c"];
  check_keys(oc, {"omega1_mhz", "omega3_mhz", "target_zx_mhz", "upper_mhz", "points", "interval_ns", "dt_ps"}, "omega_c");
  read(oc, "omega1_mhz", c.omega_c.omega1_mhz);
  read(oc, "omega3_mhz", c.omega_c.omega3_mhz);
  read(oc, "target_zx_mhz", c.omega_c.target_zx_mhz);
  read(oc, "upper_mhz", c.omega_c.upper_mhz);
  read(oc, "points", c.omega_c.points);
  read(oc, "interval_ns", c.omega_c.interval_ns);
  read(oc, "dt_ps", c.omega_c.dt_ps);

  c.validate();
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCategory::io, "config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string dump_config(const ScenarioConfig& c) {
  YAML::Emitter e;
  e.SetDoublePrecision(17);
  e << YAML::BeginMap;
  e << YAML::Key << "scenario" << YAML::Value << std::string(scenario_name(c.scenario));
  e << YAML::Key << "seed" << YAML::Value << c.seed;
  e << YAML::Key << "figure_of_merit" << YAML::Value << std::string(figure_of_merit_name(c.figure_of_merit));
  auto seq = [&](const char* k, const std::vector<double>& v) {
    e << YAML::Key << k << YAML::Value << YAML::Flow << v;
  };
  e << YAML::Key << "device" << YAML::Value << YAML::BeginMap;
  seq("qubit_freq_mhz", c.device.freq_mhz);
  seq("coupling_mhz", c.device.coupling_mhz);
  e << YAML::EndMap;
  e << YAML::Key << "transmon" << YAML::Value << YAML::BeginMap;
  seq("omega_h_mhz", c.transmon.omega_h_mhz);
  seq("epsilon", c.transmon.epsilon);
  seq("coupling_mhz", c.transmon.coupling_mhz);
  e << YAML::Key << "levels" << YAML::Value << c.transmon.levels;
  e << YAML::Key << "global_truncation" << YAML::Value << c.transmon.global_truncation;
  e << YAML::Key << "fock_dim" << YAML::Value << c.transmon.fock_dim;
  e << YAML::EndMap;
  e << YAML::Key << "pulse" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "duration_ns" << YAML::Value << c.pulse.duration_ns;
  e << YAML::Key << "sample_period_ns" << YAML::Value << c.pulse.sample_period_ns;
  e << YAML::Key << "ramp_samples" << YAML::Value << c.pulse.ramp_samples;
  e << YAML::Key << "cr_max_mhz" << YAML::Value << c.pulse.cr_max_mhz;
  e << YAML::Key << "drive_max_mhz" << YAML::Value << c.pulse.drive_max_mhz;
  e << YAML::Key << "prescan_points" << YAML::Value << c.pulse.prescan_points;
  e << YAML::Key << "calibration_amplitude" << YAML::Value << c.pulse.calibration_amplitude;
  e << YAML::Key << "calibration_budget" << YAML::Value << c.pulse.calibration_budget;
  e << YAML::EndMap;
  e << YAML::Key << "noise" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "readout" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "baseline" << YAML::Value;
  if (c.noise.readout.baseline)
    e << *c.noise.readout.baseline;
  else
    e << YAML::Null;
  e << YAML::Key << "baseline_qubits" << YAML::Value << c.noise.readout.baseline_qubits;
  e << YAML::Key << "p" << YAML::Value << c.noise.readout.p;
  e << YAML::EndMap;
  e << YAML::Key << "distortion" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "lines" << YAML::Value << YAML::BeginMap;
  for (const auto& [name, le] : c.noise.distortion.lines) {
    e << YAML::Key << name << YAML::Value << YAML::Flow << YAML::BeginMap;
    e << YAML::Key << "phase" << YAML::Value << le.phase << YAML::Key << "scale" << YAML::Value << le.scale;
    e << YAML::EndMap;
  }
  e << YAML::EndMap;
  e << YAML::Key << "kappa" << YAML::Value << c.noise.distortion.kappa;
  e << YAML::Key << "threshold_mhz" << YAML::Value << c.noise.distortion.threshold_mhz;
  e << YAML::EndMap;
  e << YAML::Key << "drift" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "frequency_step_khz" << YAML::Value << c.noise.drift.frequency_step_khz;
  e << YAML::Key << "coupling_step" << YAML::Value << c.noise.drift.coupling_step;
  e << YAML::Key << "line_phase_step" << YAML::Value << c.noise.drift.line_phase_step;
  e << YAML::Key << "tick_s" << YAML::Value << c.noise.drift.tick_s;
  e << YAML::EndMap;
  e << YAML::Key << "drift_enabled" << YAML::Value << c.noise.drift_enabled;
  e << YAML::EndMap;
  e << YAML::Key << "optimizer" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "budget" << YAML::Value << c.optimizer.budget;
  e << YAML::Key << "design_fraction" << YAML::Value << c.optimizer.design_fraction;
  e << YAML::Key << "stage1_budget" << YAML::Value << c.optimizer.stage1_budget;
  e << YAML::Key << "stage2_budget" << YAML::Value << c.optimizer.stage2_budget;
  e << YAML::EndMap;
  e << YAML::Key << "tomography" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "shots" << YAML::Value << c.tomography.shots;
  e << YAML::Key << "zf_samples" << YAML::Value << c.tomography.zf_samples;
  e << YAML::Key << "zf_shots" << YAML::Value << c.tomography.zf_shots;
  e << YAML::EndMap;
  e << YAML::Key << "floquet" << YAML::Value << YAML::BeginMap;
  seq("weights_mhz", c.floquet.weights_mhz);
  e << YAML::Key << "omega_mhz" << YAML::Value << c.floquet.omega_mhz;
  e << YAML::Key << "periods" << YAML::Value << c.floquet.periods;
  e << YAML::Key << "c_zx_mhz" << YAML::Value << c.floquet.c_zx_mhz;
  e << YAML::Key << "c_xz_mhz" << YAML::Value << c.floquet.c_xz_mhz;
  e << YAML::Key << "c_x1_mhz" << YAML::Value << c.floquet.c_x1_mhz;
  e << YAML::Key << "c_x3_mhz" << YAML::Value << c.floquet.c_x3_mhz;
  e << YAML::Key << "zz12_mhz" << YAML::Value << c.floquet.zz12_mhz;
  e << YAML::Key << "zz23_mhz" << YAML::Value << c.floquet.zz23_mhz;
  e << YAML::Key << "omega_c_mhz" << YAML::Value << c.floquet.omega_c_mhz;
  seq("lower_mhz", c.floquet.lower_mhz);
  seq("upper_mhz", c.floquet.upper_mhz);
  e << YAML::Key << "resolution_ns" << YAML::Value << c.floquet.resolution_ns;
  e << YAML::Key << "full_tier" << YAML::Value << c.floquet.full_tier;
  e << YAML::Key << "omega1_mhz" << YAML::Value << c.floquet.omega1_mhz;
  e << YAML::Key << "omega3_mhz" << YAML::Value << c.floquet.omega3_mhz;
  e << YAML::Key << "device_omega_c_mhz" << YAML::Value << c.floquet.device_omega_c_mhz;
  e << YAML::EndMap;
  e << YAML::Key << "drift_study" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "ticks" << YAML::Value << c.drift_study.ticks;
  e << YAML::Key << "shots" << YAML::Value << c.drift_study.shots;
  e << YAML::Key << "zx_angle" << YAML::Value << c.drift_study.zx_angle;
  e << YAML::EndMap;
  e << YAML::Key << "omega_c" << YAML::Value << YAML::BeginMap;
  e << YAML::Key << "omega1_mhz" << YAML::Value << c.omega_c.omega1_mhz;
  e << YAML::Key << "omega3_mhz" << YAML::Value << c.omega_c.omega3_mhz;
  e << YAML::Key << "target_zx_mhz" << YAML::Value << c.omega_c.target_zx_mhz;
  e << YAML::Key << "upper_mhz" << YAML::Value << c.omega_c.upper_mhz;
  e << YAML::Key << "points" << YAML::Value << c.omega_c.points;
  e << YAML::Key << "interval_ns" << YAML::Value << c.omega_c.interval_ns;
  e << YAML::Key << "dt_ps" << YAML::Value << c.omega_c.dt_ps;
  e << YAML::EndMap;
  e << YAML::EndMap;
  return std::string(e.c_str()) + "\n";
}

}  // namespace vqgo
