// SPDX-License-Identifier: Apache-2.0
#include "vqgo/scenarios/three_qubit.hpp"

#include <cmath>

#include "vqgo/bayesopt/optimizer.hpp"
#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"
#include "vqgo/core/pauli.hpp"
#include "vqgo/core/rng.hpp"
#include "vqgo/device/rates.hpp"
#include "vqgo/scenarios/zx.hpp"
#include "vqgo/tomography/process_tomography.hpp"

namespace vqgo {
namespace {

double wrap(double a) { return std::remainder(a, kTwoPi); }

/// Signed rate of `label` for the block alone at the calibration envelope.
double block_rate(const CrSetup& s, double envelope, double phase, const std::string& label) {
  CrParams p;
  p.d1 = envelope;
  p.phase = phase;
  RateExtractionOptions ro;
  ro.terms = cross_resonance_terms(s.model.n(), s.control, s.target);
  ro.terms.push_back(label);
  ro.max_residual = 1.0;
  return extract_effective_rates(s.model, cr_program(s, p), ro)[label];
}

}  // namespace

ThreeQubitSetup three_qubit_setup(const ScenarioConfig& c) {
  require(c.device.freq_mhz.size() == 3, "three-qubit scenario: three-qubit device expected");
  ThreeQubitSetup s;
  s.left = cr_setup(c, 0, 1);
  s.left.channel = "cr1";
  s.right = cr_setup(c, 2, 1);
  s.right.channel = "cr3";
  return s;
}

ThreeQubitSetup calibrate_three_qubit_setup(const ScenarioConfig& c, std::vector<CalibrationResult>* calibrations,
                                            long* evaluations) {
  ThreeQubitSetup s = three_qubit_setup(c);
  long tick = 0;
  double phase[2] = {0.0, 0.0};
  const CrSetup* sides[2] = {&s.left, &s.right};
  for (int k = 0; k < 2; ++k) {
    CalibrationResult cal =
        calibrate_phase(*sides[k], phase_calibration_options(c, derive_seed(c.seed, {1, static_cast<std::uint64_t>(k)})));
    cal.name = k == 0 ? "phase_cr1" : "phase_cr3";
    tick += cal.evaluations;
    if (calibrations) calibrations->push_back(cal);
    if (!cal.ok) fail(ErrorCategory::calibration, "three-qubit setup: " + cal.name + ": " + cal.message);
    phase[k] = cal.values.at("phase");
  }
  // Signs of the target: c_ZX1 < 0 and c_1YZ < 0.
  const double env = c.pulse.calibration_amplitude;
  s.phase1 = block_rate(s.left, env, phase[0], "ZXI") > 0.0 ? wrap(phase[0] + kPi) : phase[0];
  const double plus = wrap(phase[1] + 0.5 * kPi);
  s.phase3 = block_rate(s.right, env, plus, "IYZ") < 0.0 ? plus : wrap(phase[1] - 0.5 * kPi);
  if (evaluations) *evaluations = tick;
  return s;
}

PulseProgram three_qubit_program(const ThreeQubitSetup& s, const ThreeQubitParams& p) {
  const CrSetup& l = s.left;
  PulseProgram prog = make_program(l.duration, l.sample_period);
  const double w2 = l.model.freq[1];
  if (p.d1 != 0.0)
    prog.channels.push_back(constant_channel(prog, s.left.channel, 0, 1, w2, l.cr_max, p.d1, 0.0, s.phase1, l.ramp_samples));
  if (p.d3 != 0.0)
    prog.channels.push_back(
        constant_channel(prog, s.right.channel, 2, 1, w2, l.cr_max, p.d3, 0.0, s.phase3, l.ramp_samples));
  if (p.central != 0.0)
    prog.channels.push_back(constant_channel(prog, "central", 1, 1, w2, l.drive_max, p.central, 0.0, p.central_phase,
                                             l.ramp_samples));
  if (p.vz1 != 0.0) set_virtual_z(prog, 0, 3, p.vz1);
  if (p.vz3 != 0.0) set_virtual_z(prog, 2, 3, p.vz3);
  track_dressed_frames(prog, l.model);
  return apply_distortion(prog, l.distortion);
}

CMatrix three_qubit_gate(const ThreeQubitSetup& s, const ThreeQubitParams& p) {
  return propagate_qubit_model(s.left.model, three_qubit_program(s, p), Frame::rotating);
}

CMatrix zx1_1yz_target() {
  return expm(PauliString("ZXI").matrix() + PauliString("IYZ").matrix(), -0.25 * kPi);
}
CMatrix zx1_block_target() { return expm(PauliString("ZXI").matrix(), -0.25 * kPi); }
CMatrix yz_block_target() { return expm(PauliString("IYZ").matrix(), -0.25 * kPi); }

const std::array<std::string, 3>& zx1_1yz_dominant_labels() {
  static const std::array<std::string, 3> l{"III", "ZXI", "IYZ"};
  return l;
}

double max_nondominant_chi(const ProcessMatrix& p) {
  require(p.n == 3, "max_nondominant_chi: three-qubit process expected");
  std::vector<int> dom;
  for (const auto& l : zx1_1yz_dominant_labels()) dom.push_back(static_cast<int>(PauliString(l).index()));
  auto is_dom = [&](int k) { return std::find(dom.begin(), dom.end(), k) != dom.end(); };
  double m = 0.0;
  for (int a = 0; a < p.chi.rows(); ++a)
    for (int b = 0; b < p.chi.cols(); ++b)
      if (!(is_dom(a) && is_dom(b))) m = std::max(m, std::abs(p.chi(a, b)));
  return m;
}

GateRun run_zx1_1yz_scenario(const ScenarioConfig& c, const RunHooks& hooks) {
  c.validate();
  auto log = [&](const std::string& m) {
    if (hooks.log) hooks.log(m);
  };
  GateRun run;
  run.scenario = ScenarioKind::zx1_1yz_gate;
  run.readout = scenario_readout(c, 3);
  run.target = zx1_1yz_target();

  long tick = 0;
  ThreeQubitSetup s = calibrate_three_qubit_setup(c, &run.calibrations, &tick);
  run.summary["phase1"] = s.phase1;
  run.summary["phase3"] = s.phase3;
  log("cr phases " + std::to_string(s.phase1) + ", " + std::to_string(s.phase3));
  const double phase[2] = {run.calibrations[0].values.at("phase"), run.calibrations[1].values.at("phase")};

  const ZxPrescan pre1 = zx_prescan(s.left, phase[0], c.pulse.prescan_points);
  const ZxPrescan pre3 = zx_prescan(s.right, phase[1], c.pulse.prescan_points);
  run.summary["d1_bound"] = pre1.bound;
  run.summary["d3_bound"] = pre3.bound;

  auto measure = [&](const CMatrix& u, const CMatrix& target, std::uint64_t stage, long t) {
    return measure_figure_of_merit(c.figure_of_merit, u, target, run.readout, c.tomography,
                                   derive_seed(c.seed, {3, stage, static_cast<std::uint64_t>(t)}));
  };
  auto stage_options = [&](int budget, std::uint64_t stage, const std::string& name,
                           const std::vector<std::string>& names) {
    OptimizerOptions oo;
    oo.budget = budget;
    oo.design_fraction = c.optimizer.design_fraction;
    oo.seed = derive_seed(c.seed, {2, stage});
    oo.first_tick = tick;
    if (hooks.on_record) oo.on_record = [&hooks, name, names](const TraceRecord& r) { hooks.on_record(name, names, r); };
    return oo;
  };

  // Stage 1: blocks.
  ThreeQubitParams p;
  const CMatrix block_targets[2] = {zx1_block_target(), yz_block_target()};
  double block_fidelity[2] = {0.0, 0.0};
  for (int k = 0; k < 2; ++k) {
    const std::string name = k == 0 ? "block_zx1" : "block_1yz";
    const SearchSpace space({{k == 0 ? "d1" : "d3", 0.0, k == 0 ? pre1.bound : pre3.bound, ""},
                             {k == 0 ? "vz1" : "vz3", -kPi, kPi, "rad"}});
    auto params_of = [k](const RVector& x) {
      ThreeQubitParams q;
      (k == 0 ? q.d1 : q.d3) = x(0);
      (k == 0 ? q.vz1 : q.vz3) = x(1);
      return q;
    };
    const Objective obj = [&, k](const RVector& x, long t) {
      const CMatrix u = three_qubit_gate(s, params_of(x));
      const Estimate m = measure(u, block_targets[k], static_cast<std::uint64_t>(k), t);
      Evaluation e{m.value, m.std_error, {}};
      e.extra["fidelity"] = unitary_fidelity(u, block_targets[k]);
      return e;
    };
    OptimizationTrace tr =
        optimize(obj, space, stage_options(c.optimizer.stage1_budget, static_cast<std::uint64_t>(k), name, space.names()));
    tick += static_cast<long>(tr.records.size());
    const auto& best = recommend(tr, space);
    (k == 0 ? p.d1 : p.d3) = best.x[0];
    (k == 0 ? p.vz1 : p.vz3) = best.x[1];
    block_fidelity[k] = unitary_fidelity(three_qubit_gate(s, params_of(Eigen::Map<const RVector>(best.x.data(), 2))),
                                         block_targets[k]);
    run.summary[name + "_fidelity"] = block_fidelity[k];
    run.traces.emplace_back(name, std::move(tr));
    log(name + " fidelity " + std::to_string(block_fidelity[k]));
    if (block_fidelity[k] < 0.8)
      fail(ErrorCategory::calibration, "three-qubit scenario: stage-1 " + name + " noiseless fidelity " +
                                           std::to_string(block_fidelity[k]) + " below 0.8; stage 2 aborted");
  }

  // Stage 2: central correction.
  const SearchSpace space2({{"central", 0.0, 1.0, ""}, {"central_phase", -kPi, kPi, "rad"}});
  auto with_central = [&](const RVector& x) {
    ThreeQubitParams q = p;
    q.central = x(0);
    q.central_phase = x(1);
    return q;
  };
  const Objective obj2 = [&](const RVector& x, long t) {
    const CMatrix u = three_qubit_gate(s, with_central(x));
    const Estimate m = measure(u, run.target, 2, t);
    Evaluation e{m.value, m.std_error, {}};
    e.extra["fidelity"] = unitary_fidelity(u, run.target);
    return e;
  };
  OptimizationTrace tr2 = optimize(obj2, space2, stage_options(c.optimizer.stage2_budget, 2, "central", space2.names()));
  const auto& best2 = recommend(tr2, space2);
  run.summary["recommended_iteration"] = best2.iteration;
  run.summary["recommended_estimate"] = best2.value;
  p = with_central(Eigen::Map<const RVector>(best2.x.data(), 2));
  run.traces.emplace_back("central", std::move(tr2));

  // Audit: the correction alone on each block changes its fidelity by at most the correction's rotation angle.
  const double angle = p.central * s.left.drive_max * s.left.duration;
  bool audit = true;
  for (int k = 0; k < 2; ++k) {
    ThreeQubitParams q = p;
    (k == 0 ? q.d3 : q.d1) = 0.0;
    (k == 0 ? q.vz3 : q.vz1) = 0.0;
    const double f = unitary_fidelity(three_qubit_gate(s, q), block_targets[k]);
    run.summary[std::string(k == 0 ? "block_zx1" : "block_1yz") + "_fidelity_corrected"] = f;
    audit = audit && block_fidelity[k] - f <= angle + 1e-12;
  }
  run.summary["central_angle"] = angle;
  run.summary["audit_ok"] = audit ? 1.0 : 0.0;

  run.parameter_names = {"d1", "vz1", "d3", "vz3", "central", "central_phase"};
  run.parameters = {p.d1, p.vz1, p.d3, p.vz3, p.central, p.central_phase};
  run.gate = three_qubit_gate(s, p);
  finish_gate_run(run, c.tomography.shots, derive_seed(c.seed, {4}));
  run.summary["max_nondominant_chi"] = max_nondominant_chi(run.chi);
  const ProcessMatrix ideal = gate_tomography(run.target, run.readout, kExactShots, 0);
  run.summary["readout_floor"] = max_nondominant_chi(ideal);
  log("zx1-1yz fidelity " + std::to_string(run.fidelity) + " (noiseless gate " + std::to_string(run.exact_fidelity) + ")");
  return run;
}

}  // namespace vqgo
