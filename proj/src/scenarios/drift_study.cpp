// SPDX-License-Identifier: Apache-2.0
#include "vqgo/scenarios/drift_study.hpp"

#include <cmath>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/rng.hpp"
#include "vqgo/noise/drift.hpp"
#include "vqgo/scenarios/floquet_scenario.hpp"

namespace vqgo {

FloquetQubitTier floquet_pulse_tier(const FloquetConfig& f, const FloquetDrift& drift) {
  FloquetQubitTier t = f.tier();
  t.drift = drift;
  return t;
}

FloquetQubitTier static_zx_tier(const FloquetConfig& f, const FloquetDrift& drift) {
  FloquetQubitTier t = f.tier();
  t.c_xz = 0.0;
  t.c_x3 = 0.0;
  t.omega_c = 2.0 * t.c_x1;
  t.drive = make_floquet_drive({0.0}, t.drive.omega, 1);
  t.drift = drift;
  return t;
}

double static_zx_duration(const FloquetConfig& f, double angle) {
  require(f.c_zx_mhz != 0.0, "static_zx_duration: zero ZX rate");
  return angle / std::abs(f.tier().c_zx);
}

DriftStudyResult run_drift_study(const ScenarioConfig& c, const RunHooks& hooks) {
  c.validate();
  require(c.device.freq_mhz.size() == 3, "drift study: three-qubit device expected");
  auto log = [&](const std::string& m) {
    if (hooks.log) hooks.log(m);
  };
  const FloquetConfig& f = c.floquet;
  const long ticks = c.drift_study.ticks;
  const int shots = c.drift_study.shots;
  const ReadoutModel readout = scenario_readout(c, 3);
  const double t_floquet = f.drive().duration();
  const double t_zx = static_zx_duration(f, c.drift_study.zx_angle);

  ScenarioConfig coupling_only = c;
  coupling_only.noise.drift.frequency_step_khz = 0.0;
  coupling_only.noise.drift.line_phase_step = 0.0;

  auto compare = [&](const ScenarioConfig& cc, bool floquet, std::uint64_t tag) {
    DriftComparison out;
    const FloquetDrift d0 = floquet_drift(scenario_drift(cc, 0));
    const FloquetDrift d1 = floquet_drift(scenario_drift(cc, ticks));
    const CMatrix u0 = floquet ? floquet_pulse_tier(f, d0).propagate(0.0, t_floquet) : static_zx_tier(f, d0).propagate(0.0, t_zx);
    const CMatrix u1 = floquet ? floquet_pulse_tier(f, d1).propagate(0.0, t_floquet) : static_zx_tier(f, d1).propagate(0.0, t_zx);
    out.before = gate_tomography(u0, readout, shots, derive_seed(c.seed, {6, tag, 0}));
    out.after = gate_tomography(u1, readout, shots, derive_seed(c.seed, {6, tag, 1}));
    out.overlap = process_fidelity(out.before, out.after);
    out.max_diff = chi_max_diff(out.before, out.after);
    return out;
  };

  DriftStudyResult r;
  r.ticks = ticks;
  r.floquet = compare(c, true, 0);
  log("floquet overlap " + std::to_string(r.floquet.overlap));
  r.static_zx = compare(c, false, 1);
  log("static zx overlap " + std::to_string(r.static_zx.overlap));
  r.floquet_coupling_only = compare(coupling_only, true, 2);
  log("floquet overlap, coupling drift only " + std::to_string(r.floquet_coupling_only.overlap));
  r.summary["ticks"] = static_cast<double>(ticks);
  r.summary["hours"] = static_cast<double>(ticks) * c.noise.drift.tick_s / 3600.0;
  r.summary["floquet_overlap"] = r.floquet.overlap;
  r.summary["floquet_max_diff"] = r.floquet.max_diff;
  r.summary["static_zx_overlap"] = r.static_zx.overlap;
  r.summary["static_zx_max_diff"] = r.static_zx.max_diff;
  r.summary["floquet_coupling_only_overlap"] = r.floquet_coupling_only.overlap;
  r.summary["floquet_coupling_only_max_diff"] = r.floquet_coupling_only.max_diff;
  return r;
}

}  // namespace vqgo
