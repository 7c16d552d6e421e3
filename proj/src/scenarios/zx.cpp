// SPDX-License-Identifier: Apache-2.0
#include "vqgo/scenarios/zx.hpp"

#include <cmath>

#include "vqgo/bayesopt/optimizer.hpp"
#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"
#include "vqgo/core/pauli.hpp"
#include "vqgo/core/rng.hpp"
#include "vqgo/device/rates.hpp"

namespace vqgo {

ZxPrescan zx_prescan(const CrSetup& s, double phase, int points) {
  require(points >= 2, "zx_prescan: at least two points");
  ZxPrescan out;
  CrParams p;
  p.phase = phase;
  p.d1 = 1.0;
  const PulseProgram unit = cr_program(s, p);
  double area = 0.0;
  for (int k = 0; k < unit.num_samples(); ++k) area += unit.ramp_factor(unit.channels.front(), k) * unit.sample_period;
  const int n = s.model.n();
  std::string zx(static_cast<std::size_t>(n), 'I');
  zx[static_cast<std::size_t>(s.control)] = 'Z';
  zx[static_cast<std::size_t>(s.target)] = 'X';
  RateExtractionOptions ro;
  ro.terms = cross_resonance_terms(n, s.control, s.target);
  ro.max_residual = 1.0;
  double signed_sum = 0.0;
  bool crossed = false;
  for (int k = 1; k <= points; ++k) {
    p.d1 = static_cast<double>(k) / points;
    const auto r = extract_effective_rates(s.model, cr_program(s, p), ro);
    const double c = r[zx];
    out.amplitude.push_back(p.d1);
    out.c_zx.push_back(c);
    out.angle.push_back(std::abs(c) * area);
    signed_sum += c;
    if (!crossed && out.angle.back() >= 0.5 * kPi) {
      crossed = true;
      const std::size_t i = out.angle.size() - 1;
      const double a0 = i > 0 ? out.angle[i - 1] : 0.0, x0 = i > 0 ? out.amplitude[i - 1] : 0.0;
      out.bound = x0 + (0.5 * kPi - a0) / (out.angle[i] - a0) * (p.d1 - x0);
    }
  }
  out.sign = signed_sum < 0.0 ? -1.0 : 1.0;
  return out;
}

SearchSpace zx_search_space(double d1_bound) {
  return SearchSpace({{"d1", 0.0, d1_bound, ""}, {"d2x", -1.0, 1.0, ""}, {"vz", -kPi, kPi, "rad"}});
}

CMatrix zx_target(double sign) { return expm(PauliString("ZX").matrix(), sign * 0.25 * kPi); }

GateRun run_zx_scenario(const ScenarioConfig& c, const RunHooks& hooks) {
  c.validate();
  require(c.device.freq_mhz.size() == 2, "zx scenario: two-qubit device expected");
  auto log = [&](const std::string& m) {
    if (hooks.log) hooks.log(m);
  };
  GateRun run;
  run.scenario = ScenarioKind::zx_gate;
  const CrSetup s = cr_setup(c, 0, 1);

  const CalibrationResult cal = calibrate_phase(s, phase_calibration_options(c, derive_seed(c.seed, {1})));
  run.calibrations.push_back(cal);
  if (!cal.ok) fail(ErrorCategory::calibration, "zx scenario: " + cal.message);
  const double phase = cal.values.at("phase");
  log("phase calibrated: " + std::to_string(phase));

  const ZxPrescan pre = zx_prescan(s, phase, c.pulse.prescan_points);
  run.summary["d1_bound"] = pre.bound;
  run.summary["zx_sign"] = pre.sign;
  run.target = zx_target(pre.sign);
  run.readout = scenario_readout(c, 2);

  const SearchSpace space = zx_search_space(pre.bound);
  auto gate_at = [&](const RVector& x) {
    CrParams p;
    p.d1 = x(0);
    p.d2x = x(1);
    p.vz = x(2);
    p.phase = phase;
    return cr_gate(s, p);
  };
  const Objective objective = [&](const RVector& x, long tick) {
    const CMatrix u = gate_at(x);
    Evaluation e;
    const Estimate m = measure_figure_of_merit(c.figure_of_merit, u, run.target, run.readout, c.tomography,
                                               derive_seed(c.seed, {3, static_cast<std::uint64_t>(tick)}));
    e.value = m.value;
    e.std_error = m.std_error;
    e.extra["fidelity"] = unitary_fidelity(u, run.target);
    return e;
  };
  OptimizerOptions oo;
  oo.budget = c.optimizer.budget;
  oo.design_fraction = c.optimizer.design_fraction;
  oo.seed = derive_seed(c.seed, {2});
  oo.first_tick = cal.evaluations;
  const auto names = space.names();
  if (hooks.on_record) oo.on_record = [&](const TraceRecord& r) { hooks.on_record("zx", names, r); };
  OptimizationTrace trace = optimize(objective, space, oo);

  const auto& best = recommend(trace, space);
  run.parameter_names = names;
  run.parameters = best.x;
  run.summary["recommended_iteration"] = best.iteration;
  run.summary["recommended_estimate"] = best.value;
  run.gate = gate_at(Eigen::Map<const RVector>(best.x.data(), static_cast<Eigen::Index>(best.x.size())));
  run.traces.emplace_back("zx", std::move(trace));
  finish_gate_run(run, c.tomography.shots, derive_seed(c.seed, {4}));
  log("zx fidelity " + std::to_string(run.fidelity) + " (noiseless gate " + std::to_string(run.exact_fidelity) + ")");
  return run;
}

}  // namespace vqgo
