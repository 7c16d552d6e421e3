// SPDX-License-Identifier: Apache-2.0
#include "vqgo/scenarios/floquet_scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "vqgo/bayesopt/optimizer.hpp"
#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"
#include "vqgo/core/pauli.hpp"
#include "vqgo/core/rng.hpp"
#include "vqgo/device/full_model.hpp"
#include "vqgo/device/units.hpp"

namespace vqgo {

FloquetDrift floquet_drift(const DriftState& s) {
  require(s.frequency.size() == 3 && s.line_phase.size() == 3, "floquet_drift: three qubits and lines expected");
  FloquetDrift d;
  for (std::size_t q = 0; q < 3; ++q) {
    d.detuning[q] = s.frequency[q];
    d.line_phase[q] = s.line_phase[q];
  }
  double mean = 0.0;
  for (double x : s.coupling) mean += x;
  if (!s.coupling.empty()) mean /= static_cast<double>(s.coupling.size());
  d.coupling_scale = 1.0 + mean;
  return d;
}

DriftState scenario_drift(const ScenarioConfig& c, long ticks) {
  const int n = static_cast<int>(c.device.freq_mhz.size());
  const DriftState zero = DriftState::zero(n, n - 1, n);
  if (!c.noise.drift_enabled || ticks <= 0) return zero;
  return drift_step(zero, c.noise.drift.process(derive_seed(c.seed, {5})), ticks, 0);
}

SearchSpace floquet_search_space(const FloquetConfig& f) {
  const char* names[4] = {"omega0", "omega1", "omega2", "omega_c"};
  std::vector<Parameter> p;
  for (std::size_t k = 0; k < 4; ++k) p.push_back({names[k], f.lower_mhz[k], f.upper_mhz[k], "MHz"});
  return SearchSpace(std::move(p));
}

FloquetQubitTier floquet_tier_at(const FloquetConfig& f, const RVector& x, const FloquetDrift& drift) {
  require(x.size() == 4, "floquet_tier_at: four parameters expected");
  FloquetQubitTier t = f.tier();
  t.drive = make_floquet_drive({units::mhz(x(0)), units::mhz(x(1)), units::mhz(x(2))}, units::mhz(f.omega_mhz),
                               f.periods);
  t.omega_c = units::mhz(x(3));
  t.drift = drift;
  return t;
}

CMatrix floquet_target(const FloquetConfig& f) { return zyz_target(kTwoPi * f.periods / 25.0); }

FloquetFullTier floquet_full_tier(const ScenarioConfig& c, double resolution) {
  const FloquetConfig& f = c.floquet;
  const FullModel model(c.transmon.model());
  FloquetDeviceDrive d;
  d.omega1 = units::mhz(f.omega1_mhz);
  d.omega3 = units::mhz(f.omega3_mhz);
  d.omega_c = units::mhz(f.device_omega_c_mhz);
  d.drive = f.drive();
  const PulseProgram prog = floquet_device_program(model, d);
  const double period = d.drive.period();
  const long per = std::lround(period / resolution);
  require(per >= 1 && std::abs(per * resolution - period) < 1e-6 * period,
          "floquet_full_tier: resolution must divide the period");
  const long total = per * f.periods;

  std::vector<double> checkpoints;
  for (long k = 1; k <= total; ++k) checkpoints.push_back(static_cast<double>(k) * resolution);
  std::vector<CMatrix> gates{CMatrix::Identity(8, 8)};
  FloquetFullTier out;
  // Unwrapped phases of the determinants of the central-qubit blocks, one per (Q1, Q3) basis pair.
  std::array<double, 4> theta{0.0, 0.0, 0.0, 0.0};
  std::array<double, 4> theta_period{0.0, 0.0, 0.0, 0.0};
  model.propagate(prog.source(), computational_inputs(model), 0.0, prog.duration, 1e-12 * c.omega_c.dt_ps, checkpoints,
                  [&](double t, const CMatrix& cols) {
                    const auto s = qubit_subspace_unitary(model, cols, t, 0.25);
                    out.max_leakage = std::max(out.max_leakage, s.leakage);
                    for (int a = 0; a < 2; ++a)
                      for (int b = 0; b < 2; ++b) {
                        const int i0 = 4 * a + b, i1 = 4 * a + 2 + b;
                        const cplx det = s.u(i0, i0) * s.u(i1, i1) - s.u(i0, i1) * s.u(i1, i0);
                        double& th = theta[static_cast<std::size_t>(2 * a + b)];
                        th += std::remainder(std::arg(det) - th, kTwoPi);
                      }
                    gates.push_back(s.u);
                    if (gates.size() == static_cast<std::size_t>(per) + 1) theta_period = theta;
                  });
  // det phase of block (a, b) is -2 t (c_0 + s_a c_ZII + s_b c_IIZ + s_a s_b c_ZIZ) with s = +1 for |0>.
  double zii = 0.0, iiz = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const double th = theta_period[static_cast<std::size_t>(2 * a + b)];
      zii += (a == 0 ? 1.0 : -1.0) * th;
      iiz += (b == 0 ? 1.0 : -1.0) * th;
    }
  out.c_zii = -zii / (8.0 * period);
  out.c_iiz = -iiz / (8.0 * period);
  const CMatrix frame = out.c_zii * PauliString("ZII").matrix() + out.c_iiz * PauliString("IIZ").matrix();
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const double t = static_cast<double>(k) * resolution;
    const CMatrix u = expm(frame, -t) * gates[k];
    const auto p = plus_minus_populations(u);
    out.populations.time.push_back(t);
    out.populations.plus.push_back(p[0]);
    out.populations.minus.push_back(p[1]);
    if (k + 1 == gates.size()) out.gate = u;
  }
  return out;
}

GateRun run_floquet_scenario(const ScenarioConfig& c, const RunHooks& hooks) {
  c.validate();
  require(c.device.freq_mhz.size() == 3, "floquet scenario: three-qubit device expected");
  auto log = [&](const std::string& m) {
    if (hooks.log) hooks.log(m);
  };
  const FloquetConfig& f = c.floquet;
  GateRun run;
  run.scenario = ScenarioKind::floquet_zyz;
  run.target = floquet_target(f);
  run.readout = scenario_readout(c, 3);
  const double resolution = units::ns(f.resolution_ns);
  const double duration = f.drive().duration();

  const FloquetQubitTier table = f.tier();
  run.populations["table"] = floquet_populations(table, duration, resolution);
  run.summary["table_minus_final"] = run.populations["table"].minus.back();
  run.summary["table_fidelity"] = unitary_fidelity(table.propagate(0.0, duration), run.target);
  if (f.full_tier) {
    log("full transmon tier");
    const FloquetFullTier full = floquet_full_tier(c, resolution);
    run.populations["table_full"] = full.populations;
    run.summary["full_minus_final"] = full.populations.minus.back();
    run.summary["full_max_leakage"] = full.max_leakage;
    run.summary["full_c_zii_mhz"] = units::to_mhz(full.c_zii);
    run.summary["full_c_iiz_mhz"] = units::to_mhz(full.c_iiz);
  }

  const SearchSpace space = floquet_search_space(f);
  const auto names = space.names();
  auto gate_at = [&](const RVector& x, long tick) {
    return floquet_tier_at(f, x, floquet_drift(scenario_drift(c, tick))).propagate(0.0, duration);
  };
  const Objective objective = [&](const RVector& x, long tick) {
    const CMatrix u = gate_at(x, tick);
    const Estimate m = measure_figure_of_merit(c.figure_of_merit, u, run.target, run.readout, c.tomography,
                                               derive_seed(c.seed, {3, static_cast<std::uint64_t>(tick)}));
    Evaluation e{m.value, m.std_error, {}};
    e.extra["fidelity"] = unitary_fidelity(u, run.target);
    return e;
  };
  OptimizerOptions oo;
  oo.budget = c.optimizer.budget;
  oo.design_fraction = c.optimizer.design_fraction;
  oo.seed = derive_seed(c.seed, {2});
  if (hooks.on_record) oo.on_record = [&](const TraceRecord& r) { hooks.on_record("floquet", names, r); };
  OptimizationTrace trace = optimize(objective, space, oo);

  const auto& best = recommend(trace, space);
  const RVector x = Eigen::Map<const RVector>(best.x.data(), static_cast<Eigen::Index>(best.x.size()));
  const long final_tick = oo.first_tick + oo.budget;
  run.parameter_names = names;
  run.parameters = best.x;
  run.summary["recommended_iteration"] = best.iteration;
  run.summary["recommended_estimate"] = best.value;
  run.gate = gate_at(x, final_tick);
  run.populations["final"] =
      floquet_populations(floquet_tier_at(f, x, floquet_drift(scenario_drift(c, final_tick))), duration, resolution);
  double tail = 0.0;
  int tail_count = 0;
  for (const auto& r : trace.records) {
    if (r.failed || 4 * r.iteration < 3 * oo.budget) continue;
    tail += r.value;
    ++tail_count;
  }
  run.summary["last_quartile_mean"] = tail_count > 0 ? tail / tail_count : 0.0;
  run.traces.emplace_back("floquet", std::move(trace));
  finish_gate_run(run, c.tomography.shots, derive_seed(c.seed, {4}));
  log("floquet fidelity " + std::to_string(run.fidelity) + " (noiseless gate " + std::to_string(run.exact_fidelity) +
      ")");
  return run;
}

}  // namespace vqgo
