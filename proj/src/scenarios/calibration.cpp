// SPDX-License-Identifier: Apache-2.0
#include "vqgo/scenarios/calibration.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/tools/minima.hpp>

#include "vqgo/bayesopt/optimizer.hpp"
#include "vqgo/core/errors.hpp"
#include "vqgo/core/pauli.hpp"
#include "vqgo/device/rates.hpp"
#include "vqgo/device/units.hpp"

namespace vqgo {

nlohmann::json to_json(const CalibrationResult& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["values"] = r.values;
  j["residuals"] = r.residuals;
  j["ok"] = r.ok;
  j["evaluations"] = r.evaluations;
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

CrSetup cr_setup(const ScenarioConfig& c, int control, int target) {
  CrSetup s;
  s.model = c.device.model();
  require(control >= 0 && control < s.model.n() && target >= 0 && target < s.model.n() && control != target,
          "cr_setup: bad qubit pair");
  s.control = control;
  s.target = target;
  s.duration = units::ns(c.pulse.duration_ns);
  s.sample_period = units::ns(c.pulse.sample_period_ns);
  s.ramp_samples = c.pulse.ramp_samples;
  s.cr_max = units::mhz(c.pulse.cr_max_mhz);
  s.drive_max = units::mhz(c.pulse.drive_max_mhz);
  s.distortion = c.noise.distortion.model();
  return s;
}

PulseProgram cr_program(const CrSetup& s, const CrParams& p) {
  PulseProgram prog = make_program(s.duration, s.sample_period);
  const double wt = s.model.freq[static_cast<std::size_t>(s.target)];
  if (p.d1 != 0.0)
    prog.channels.push_back(
        constant_channel(prog, s.channel, s.control, s.target, wt, s.cr_max, p.d1, 0.0, p.phase, s.ramp_samples));
  if (p.d2x != 0.0 || p.d2y != 0.0)
    prog.channels.push_back(
        constant_channel(prog, "target", s.target, s.target, wt, s.drive_max, p.d2x, p.d2y, 0.0, s.ramp_samples));
  if (p.vz != 0.0) set_virtual_z(prog, s.control, s.model.n(), p.vz);
  track_dressed_frames(prog, s.model);
  return apply_distortion(prog, s.distortion);
}

CMatrix cr_gate(const CrSetup& s, const CrParams& p) {
  return propagate_qubit_model(s.model, cr_program(s, p), Frame::rotating);
}

double phase_calibration_cost(const CrSetup& s, double envelope, double phase) {
  CrParams p;
  p.d1 = envelope;
  p.phase = phase;
  const CMatrix u = cr_gate(s, p);
  const int n = s.model.n();
  std::vector<CVector> f;
  const double r = 1.0 / std::sqrt(2.0);
  for (int q = 0; q < n; ++q) {
    CVector v(2);
    if (q == s.control || q == s.target)
      v << r, r;
    else
      v << 1.0, 0.0;
    f.push_back(v);
  }
  CVector psi = f[0];
  for (int q = 1; q < n; ++q) {
    CVector next(psi.size() * 2);
    for (Eigen::Index a = 0; a < psi.size(); ++a)
      for (int b = 0; b < 2; ++b) next(2 * a + b) = psi(a) * f[static_cast<std::size_t>(q)](b);
    psi = next;
  }
  const CVector out = u * psi;
  std::string label(static_cast<std::size_t>(n), 'I');
  label[static_cast<std::size_t>(s.target)] = 'X';
  const double ex = out.dot(PauliString(label).matrix() * out).real();
  return 0.5 * (1.0 - ex);
}

PhaseCalibrationOptions phase_calibration_options(const ScenarioConfig& c, std::uint64_t seed) {
  PhaseCalibrationOptions o;
  o.envelope = c.pulse.calibration_amplitude;
  o.budget = c.pulse.calibration_budget;
  o.seed = seed;
  return o;
}

CalibrationResult calibrate_phase(const CrSetup& s, const PhaseCalibrationOptions& opt) {
  CalibrationResult res;
  res.name = "phase";
  long evals = 0;
  const SearchSpace space({{"phase", -0.5 * kPi, 0.5 * kPi, "rad"}});
  OptimizerOptions o;
  o.budget = opt.budget;
  o.seed = opt.seed;
  const auto trace = optimize(
      [&](const RVector& x, long) {
        ++evals;
        return Evaluation{-phase_calibration_cost(s, opt.envelope, x(0)), 0.0, {}};
      },
      space, o);
  const double start = trace.incumbent().x[0];
  const double lo = std::max(-0.5 * kPi, start - 0.25), hi = std::min(0.5 * kPi, start + 0.25);
  std::uintmax_t iters = 60;
  const auto best = boost::math::tools::brent_find_minima(
      [&](double ph) {
        ++evals;
        return phase_calibration_cost(s, opt.envelope, ph);
      },
      lo, hi, 40, iters);
  res.values["phase"] = best.first;
  res.residuals["cost"] = best.second;
  res.evaluations = evals;
  res.ok = best.second <= opt.max_residual;
  if (!res.ok) res.message = "phase calibration residual above threshold";
  return res;
}

SideRates side_rates(const FullModel& m, int side, double amplitude, double omega_c, const OmegaCConfig& c) {
  require(m.n() == 3 && (side == 0 || side == 2), "side_rates: side must be transmon 0 or 2 of three");
  PulseProgram prog = make_program(100e-9, 1e-9);
  const double w2 = m.qubit_frequencies()[1];
  prog.channels.push_back(constant_channel(prog, "cr", side, 1, w2, amplitude, 1.0, 0.0, 0.5 * kPi));
  if (omega_c > 0.0)
    prog.channels.push_back(constant_channel(prog, "compensation", 1, 1, w2, omega_c, 1.0, 0.0, -0.5 * kPi));
  RateExtractionOptions o;
  o.points = c.points;
  o.interval = units::ns(c.interval_ns);
  o.dt = 1e-12 * c.dt_ps;
  const auto r = extract_effective_rates(m, prog, o);
  SideRates out;
  out.c_1x = r["IXI"];
  out.c_zx = side == 0 ? r["ZXI"] : r["IXZ"];
  out.r0 = out.c_1x + out.c_zx;
  out.r1 = out.c_1x - out.c_zx;
  out.residual = r.residual;
  return out;
}

CalibrationResult calibrate_omega_c(const FullModel& m, const OmegaCConfig& c) {
  CalibrationResult res;
  res.name = "omega_c";
  long evals = 0;
  const double target = units::mhz(c.target_zx_mhz);
  double total = 0.0;
  for (int side : {0, 2}) {
    const std::string tag = side == 0 ? "1" : "3";
    double amp = units::mhz(side == 0 ? c.omega1_mhz : c.omega3_mhz);
    double lo = 0.0, hi = units::mhz(c.upper_mhz);
    double oc = 0.0;
    SideRates r;
    auto imbalance = [](const SideRates& s) { return std::abs(s.r0) - std::abs(s.r1); };
    auto converged = [](const SideRates& s) { return std::abs(std::abs(s.r0) - std::abs(s.r1)) <= 0.01 * std::abs(s.r0); };
    bool done = false;
    for (int outer = 0; outer < 6 && !done; ++outer) {
      auto f_lo = side_rates(m, side, amp, lo, c);
      auto f_hi = side_rates(m, side, amp, hi, c);
      evals += 2;
      if (imbalance(f_lo) * imbalance(f_hi) > 0.0) {
        lo = 0.0;
        hi = units::mhz(c.upper_mhz);
        f_lo = side_rates(m, side, amp, lo, c);
        f_hi = side_rates(m, side, amp, hi, c);
        evals += 2;
        if (imbalance(f_lo) * imbalance(f_hi) > 0.0)
          fail(ErrorCategory::calibration, "calibrate_omega_c: compensation bracket has no sign change");
      }
      const double s_lo = imbalance(f_lo);
      bool found = false;
      for (int it = 0; it < 50; ++it) {
        oc = 0.5 * (lo + hi);
        r = side_rates(m, side, amp, oc, c);
        ++evals;
        if (converged(r)) {
          found = true;
          break;
        }
        (imbalance(r) * s_lo > 0.0 ? lo : hi) = oc;
      }
      if (!found) fail(ErrorCategory::calibration, "calibrate_omega_c: bisection did not converge in 50 steps");
      if (std::abs(std::abs(r.c_zx) - target) <= 0.02 * target) {
        done = true;
        break;
      }
      amp *= target / std::abs(r.c_zx);
      // Warm bracket around the last compensation for the next round.
      lo = std::max(0.0, oc - 0.25 * units::mhz(c.upper_mhz));
      hi = oc + 0.25 * units::mhz(c.upper_mhz);
    }
    if (!done) fail(ErrorCategory::calibration, "calibrate_omega_c: amplitude adjustment did not converge");
    res.values["omega_c" + tag] = units::to_mhz(oc);
    res.values["omega" + tag] = units::to_mhz(amp);
    res.values["c_zx" + tag] = units::to_mhz(r.c_zx);
    res.values["r0_" + tag] = units::to_mhz(r.r0);
    res.values["r1_" + tag] = units::to_mhz(r.r1);
    res.residuals["imbalance" + tag] = std::abs(std::abs(r.r0) - std::abs(r.r1)) / std::abs(r.r0);
    res.residuals["c_1x_ratio" + tag] = std::abs(r.c_1x) / std::abs(r.c_zx);
    res.residuals["fit" + tag] = r.residual;
    total += oc;
  }
  res.values["omega_c"] = units::to_mhz(total);
  res.evaluations = evals;
  return res;
}

}  // namespace vqgo
