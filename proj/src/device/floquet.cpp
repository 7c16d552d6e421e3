// SPDX-License-Identifier: Apache-2.0
#include "vqgo/device/floquet.hpp"

#include <cmath>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"
#include "vqgo/core/pauli.hpp"
#include "vqgo/device/pulse.hpp"

namespace vqgo {
namespace {

CMatrix op(const char* label) { return PauliString(label).matrix(); }

struct TierOperators {
  CMatrix fixed;
  CMatrix drive;  ///< multiplies Omega(t)
};

TierOperators tier_operators(const FloquetQubitTier& m) {
  const auto& d = m.drift;
  const double s = d.coupling_scale;
  const double c1 = std::cos(d.line_phase[0]), s1 = std::sin(d.line_phase[0]);
  const double c2 = std::cos(d.line_phase[1]), s2 = std::sin(d.line_phase[1]);
  const double c3 = std::cos(d.line_phase[2]), s3 = std::sin(d.line_phase[2]);
  TierOperators t;
  // A phase error on a line rotates every term that line generates within the X-Y plane of the central qubit.
  t.fixed = s * m.c_zx * (c1 * op("ZXI") - s1 * op("ZYI")) + s * m.c_x1 * (c1 * op("IXI") - s1 * op("IYI")) +
            s * m.c_xz * (c3 * op("IXZ") - s3 * op("IYZ")) + s * m.c_x3 * (c3 * op("IXI") - s3 * op("IYI")) +
            s * s * (m.zz_12 * op("ZZI") + m.zz_23 * op("IZZ")) -
            0.5 * m.omega_c * (c2 * op("IXI") - s2 * op("IYI"));
  const char* z[3] = {"ZII", "IZI", "IIZ"};
  for (int q = 0; q < 3; ++q) t.fixed -= 0.5 * d.detuning[static_cast<std::size_t>(q)] * op(z[q]);
  t.drive = -0.5 * (s2 * op("IXI") + c2 * op("IYI"));
  return t;
}

}  // namespace

double FloquetDrive::period() const {
  require(omega > 0.0, "FloquetDrive: frequency must be positive");
  return kTwoPi / omega;
}

double FloquetDrive::value(double t) const {
  double v = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) v += weights[k] * std::cos(static_cast<double>(k) * omega * t);
  return v;
}

double FloquetDrive::peak() const {
  double p = 0.0;
  for (double w : weights) p += std::abs(w);
  return p;
}

std::vector<double> FloquetDrive::samples(double sample_period) const {
  PulseProgram prog = make_program(duration(), sample_period);
  const int ns = prog.num_samples();
  std::vector<double> out(static_cast<std::size_t>(ns));
  // Integer periods per sample index keep the samples exactly T-periodic.
  require(ns % periods == 0, "FloquetDrive: sample period must divide the period");
  const int per = ns / periods;
  for (int k = 0; k < ns; ++k) out[static_cast<std::size_t>(k)] = value(((k % per) + 0.5) * sample_period);
  return out;
}

FloquetDrive make_floquet_drive(const std::vector<double>& weights, double omega, int periods) {
  require(omega > 0.0, "make_floquet_drive: frequency must be positive");
  require(periods >= 1, "make_floquet_drive: at least one period");
  require(!weights.empty(), "make_floquet_drive: no weights");
  return FloquetDrive{weights, omega, periods};
}

CMatrix zyz_target(double angle) { return expm(op("ZYZ"), angle); }

FloquetQubitTier FloquetQubitTier::ideal(double j, const FloquetDrive& drive) {
  FloquetQubitTier m;
  m.c_zx = m.c_xz = j;
  m.drive = drive;
  return m;
}

CMatrix FloquetQubitTier::hamiltonian(double t) const {
  const auto ops = tier_operators(*this);
  return ops.fixed + drive.value(t) * ops.drive;
}

double FloquetQubitTier::step() const {
  double norm = std::abs(c_zx) + std::abs(c_xz) + std::abs(c_x1) + std::abs(c_x3) + std::abs(zz_12) + std::abs(zz_23) +
                0.5 * std::abs(omega_c) + 0.5 * drive.peak();
  for (double d : drift.detuning) norm += 0.5 * std::abs(d);
  norm *= std::max(1.0, drift.coupling_scale * drift.coupling_scale);
  // Resolve the drive harmonics as well as the norm.
  const double harmonics = drive.omega * static_cast<double>(drive.weights.size());
  return step_for_norm(std::max(norm, harmonics), 0.1);
}

CMatrix FloquetQubitTier::propagate(double t0, double t1, double dt, const StepObserver& observer) const {
  const auto ops = tier_operators(*this);
  const double h = dt > 0.0 ? dt : step();
  return propagate_piecewise([&](double t) -> CMatrix { return ops.fixed + drive.value(t) * ops.drive; }, t0, t1, h,
                             observer);
}

std::array<double, 2> plus_minus_populations(const CMatrix& u) {
  require(u.rows() == 8 && u.cols() == 8, "plus_minus_populations: three-qubit unitary expected");
  CVector plus = CVector::Constant(8, 1.0 / std::sqrt(8.0));
  CVector minus(8);
  for (int b = 0; b < 8; ++b) {
    const int parity = ((b >> 2) ^ (b >> 1) ^ b) & 1;
    minus(b) = (parity ? -1.0 : 1.0) / std::sqrt(8.0);
  }
  const CVector out = u * plus;
  return {std::norm(plus.dot(out)), std::norm(minus.dot(out))};
}

FloquetPopulations floquet_populations(const FloquetQubitTier& tier, double t1, double resolution) {
  require(resolution > 0.0 && t1 >= 0.0, "floquet_populations: bad sampling");
  FloquetPopulations out;
  const auto n = static_cast<long>(std::llround(t1 / resolution));
  CMatrix u = CMatrix::Identity(8, 8);
  const double dt = std::min(tier.step(), resolution);
  for (long k = 0; k <= n; ++k) {
    const double t = static_cast<double>(k) * resolution;
    if (k > 0) u = tier.propagate(t - resolution, t, dt) * u;
    const auto p = plus_minus_populations(u);
    out.time.push_back(t);
    out.plus.push_back(p[0]);
    out.minus.push_back(p[1]);
  }
  return out;
}

double charge_matrix_element(const FullModel& model, int j) {
  require(j >= 0 && j < model.n(), "charge_matrix_element: bad transmon index");
  const int e = 1 << (model.n() - 1 - j);
  return std::abs(model.drive_operator(j)(model.computational_index(0), model.computational_index(e)));
}

PulseProgram floquet_device_program(const FullModel& model, const FloquetDeviceDrive& d) {
  require(model.n() == 3, "floquet_device_program: three transmons expected");
  PulseProgram prog = make_program(d.drive.duration(), d.sample_period);
  const double w2 = model.qubit_frequencies()[1];
  const double g2 = charge_matrix_element(model, 1);
  // The charge operator couples with an imaginary matrix element: phase pi/2 yields +X on the central
  // qubit from a side drive at w2, -pi/2 a -X compensation, and -pi a -Y Floquet drive.
  prog.channels.push_back(constant_channel(prog, "cr1", 0, 1, w2, d.omega1, 1.0, 0.0, 0.5 * kPi, d.ramp_samples));
  prog.channels.push_back(constant_channel(prog, "cr3", 2, 1, w2, d.omega3, 1.0, 0.0, 0.5 * kPi, d.ramp_samples));
  if (d.omega_c != 0.0)
    prog.channels.push_back(
        constant_channel(prog, "compensation", 1, 1, w2, d.omega_c, 1.0, 0.0, -0.5 * kPi, d.ramp_samples));
  const double peak = d.drive.peak();
  if (peak > 0.0) {
    DriveChannel f = constant_channel(prog, "floquet", 1, 1, w2, peak / g2, 0.0, 0.0, -kPi, d.ramp_samples);
    f.dx = d.drive.samples(d.sample_period);
    for (double& v : f.dx) v /= peak;
    prog.channels.push_back(std::move(f));
  }
  return prog;
}

}  // namespace vqgo
