// SPDX-License-Identifier: Apache-2.0
#include "vqgo/device/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "vqgo/core/errors.hpp"

namespace vqgo {

double gaussian_rise(double x, double length) {
  if (length <= 0.0 || x >= length) return 1.0;
  if (x <= 0.0) return 0.0;
  const double sigma = 0.5 * length;
  const double floor = std::exp(-length * length / (2.0 * sigma * sigma));
  const double g = std::exp(-(x - length) * (x - length) / (2.0 * sigma * sigma));
  return (g - floor) / (1.0 - floor);
}

int PulseProgram::num_samples() const {
  require(sample_period > 0.0, "PulseProgram: sample period must be positive");
  const double r = duration / sample_period;
  const double k = std::round(r);
  require(std::abs(r - k) <= 1e-6 * std::max(1.0, r), "PulseProgram: sample period must divide the duration");
  return static_cast<int>(k);
}

void PulseProgram::validate(int num_qubits) const {
  require(duration > 0.0, "PulseProgram: duration must be positive");
  const int ns = num_samples();
  for (const auto& ch : channels) {
    require(ch.target >= 0 && ch.target < num_qubits, "PulseProgram: channel '" + ch.name + "' targets a missing qubit");
    require(ch.frame >= 0 && ch.frame < num_qubits, "PulseProgram: channel '" + ch.name + "' frame out of range");
    require(ch.amplitude > 0.0, "PulseProgram: channel '" + ch.name + "' needs a positive amplitude");
    require(static_cast<int>(ch.dx.size()) == ns && static_cast<int>(ch.dy.size()) == ns,
            "PulseProgram: channel '" + ch.name + "' envelope length mismatch");
    for (int k = 0; k < ns; ++k)
      require(std::abs(ch.dx[static_cast<std::size_t>(k)]) <= 1.0 + 1e-12 &&
                  std::abs(ch.dy[static_cast<std::size_t>(k)]) <= 1.0 + 1e-12,
              "PulseProgram: channel '" + ch.name + "' envelope outside [-1, 1]");
    require(ch.ramp_samples >= 0 && 2 * ch.ramp_samples <= ns, "PulseProgram: ramp longer than the program");
  }
  require(dz.empty() || static_cast<int>(dz.size()) == num_qubits, "PulseProgram: one d^Z row per qubit");
  for (const auto& row : dz) require(row.empty() || static_cast<int>(row.size()) == ns, "PulseProgram: d^Z length mismatch");
}

double PulseProgram::ramp_factor(const DriveChannel& ch, int sample) const {
  if (ch.ramp_samples == 0) return 1.0;
  const int ns = num_samples();
  const double mid = sample + 0.5;
  const double len = ch.ramp_samples;
  return gaussian_rise(mid, len) * gaussian_rise(ns - mid, len);
}

double PulseProgram::frame_phase(int q, double t) const {
  if (dz.empty() || dz[static_cast<std::size_t>(q)].empty()) return 0.0;
  const auto& row = dz[static_cast<std::size_t>(q)];
  const int ns = static_cast<int>(row.size());
  double phi = 0.0;
  for (int k = 0; k < ns; ++k) {
    const double a = k * sample_period;
    if (t <= a) break;
    const double b = std::min(t, (k + 1) * sample_period);
    phi += 2.0 * row[static_cast<std::size_t>(k)] * (b - a);
  }
  return phi;
}

void PulseProgram::drives_at(double t, std::vector<ChannelDrive>& out) const {
  out.clear();
  const int ns = num_samples();
  const int k = std::clamp(static_cast<int>(std::floor(t / sample_period)), 0, ns - 1);
  for (const auto& ch : channels) {
    const auto ks = static_cast<std::size_t>(k);
    const double r = ramp_factor(ch, k);
    const cplx env = r * cplx(ch.dx[ks], -ch.dy[ks]);
    const double phi = ch.phase - frame_phase(ch.frame, t);
    out.push_back({ch.target, ch.carrier, ch.amplitude, env * std::exp(cplx(0.0, phi))});
  }
}

std::vector<ChannelDrive> PulseProgram::drives_at(double t) const {
  std::vector<ChannelDrive> out;
  drives_at(t, out);
  return out;
}

DriveSource PulseProgram::source() const {
  // Cumulative frame phases at sample boundaries, so lookups are O(1).
  const int ns = num_samples();
  auto cum = std::make_shared<std::vector<std::vector<double>>>(dz.size());
  for (std::size_t q = 0; q < dz.size(); ++q) {
    if (dz[q].empty()) continue;
    auto& c = (*cum)[q];
    c.assign(static_cast<std::size_t>(ns) + 1, 0.0);
    for (int k = 0; k < ns; ++k)
      c[static_cast<std::size_t>(k) + 1] = c[static_cast<std::size_t>(k)] + 2.0 * dz[q][static_cast<std::size_t>(k)] * sample_period;
  }
  return [this, cum, ns](double t, std::vector<ChannelDrive>& out) {
    out.clear();
    const int k = std::clamp(static_cast<int>(std::floor(t / sample_period)), 0, ns - 1);
    const auto ks = static_cast<std::size_t>(k);
    for (const auto& ch : channels) {
      double frame = 0.0;
      const auto f = static_cast<std::size_t>(ch.frame);
      if (f < cum->size() && !(*cum)[f].empty())
        frame = (*cum)[f][ks] + 2.0 * dz[f][ks] * (t - k * sample_period);
      const cplx env = ramp_factor(ch, k) * cplx(ch.dx[ks], -ch.dy[ks]);
      out.push_back({ch.target, ch.carrier, ch.amplitude, env * std::exp(cplx(0.0, ch.phase - frame))});
    }
  };
}

double PulseProgram::lab_field(const DriveChannel& ch, double t) const {
  const int ns = num_samples();
  const int k = std::clamp(static_cast<int>(std::floor(t / sample_period)), 0, ns - 1);
  const auto ks = static_cast<std::size_t>(k);
  const cplx env = ramp_factor(ch, k) * cplx(ch.dx[ks], -ch.dy[ks]);
  const double phi = ch.carrier * t + ch.phase - frame_phase(ch.frame, t);
  return ch.amplitude * (env * std::exp(cplx(0.0, phi))).real();
}

PulseProgram make_program(double duration, double sample_period) {
  PulseProgram p;
  p.duration = duration;
  p.sample_period = sample_period;
  (void)p.num_samples();
  return p;
}

DriveChannel constant_channel(const PulseProgram& prog, std::string name, int target, int frame, double carrier,
                              double amplitude, double dx, double dy, double phase, int ramp_samples) {
  const auto ns = static_cast<std::size_t>(prog.num_samples());
  DriveChannel ch;
  ch.name = std::move(name);
  ch.target = target;
  ch.frame = frame;
  ch.carrier = carrier;
  ch.amplitude = amplitude;
  ch.phase = phase;
  ch.dx.assign(ns, dx);
  ch.dy.assign(ns, dy);
  ch.ramp_samples = ramp_samples;
  return ch;
}

void set_virtual_z(PulseProgram& prog, int q, int num_qubits, double angle) {
  const auto ns = static_cast<std::size_t>(prog.num_samples());
  if (prog.dz.empty()) prog.dz.assign(static_cast<std::size_t>(num_qubits), {});
  prog.dz[static_cast<std::size_t>(q)].assign(ns, angle / (2.0 * prog.duration));
}

}  // namespace vqgo
