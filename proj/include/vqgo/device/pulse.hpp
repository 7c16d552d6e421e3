// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vqgo/core/types.hpp"

namespace vqgo {

/// One drive line. The lab-frame field on the target is
///   Omega * Re[(dX - i dY) * exp(-i Phi_frame(t)) * exp(i (carrier t + phase))]
/// so that a resonant drive gives (Omega/2)(dX X + dY Y) in the rotating frame.
struct DriveChannel {
  std::string name;
  int target = 0;
  /// Qubit whose software frame the carrier follows; virtual Z on that qubit shifts this channel's phase.
  int frame = 0;
  double carrier = 0.0;    ///< rad/s
  double phase = 0.0;      ///< rad
  double amplitude = 0.0;  ///< Omega, rad/s
  std::vector<double> dx;  ///< one value per sample
  std::vector<double> dy;
  /// Length of the Gaussian rise and fall in samples (sigma = length / 2); 0 disables.
  int ramp_samples = 10;
};

/// Complex drive amplitude of one channel at one instant, frame phase and ramp included.
struct ChannelDrive {
  int target = 0;
  double carrier = 0.0;
  double amplitude = 0.0;
  cplx eps{0.0, 0.0};
};

using DriveSource = std::function<void(double, std::vector<ChannelDrive>&)>;

/// Lifted Gaussian rise on [0, length]: 0 at the start, 1 at the end.
double gaussian_rise(double x, double length);

struct PulseProgram {
  double duration = 0.0;
  double sample_period = 0.0;
  std::vector<DriveChannel> channels;
  /// Virtual-Z rate d^Z per qubit frame and sample (rad/s); empty rows mean no frame motion.
  std::vector<std::vector<double>> dz;

  int num_samples() const;
  void validate(int num_qubits) const;

  double ramp_factor(const DriveChannel& ch, int sample) const;
  /// Phi_q(t) = 2 * integral of d^Z over [0, t].
  double frame_phase(int q, double t) const;

  /// Materialized drives at time t.
  void drives_at(double t, std::vector<ChannelDrive>& out) const;
  std::vector<ChannelDrive> drives_at(double t) const;
  DriveSource source() const;

  /// Coefficient of the drive operator on the target in the lab frame.
  double lab_field(const DriveChannel& ch, double t) const;
};

/// Program of `duration` with no channels.
PulseProgram make_program(double duration, double sample_period);

/// Channel with constant envelopes over the whole program.
DriveChannel constant_channel(const PulseProgram& prog, std::string name, int target, int frame, double carrier,
                              double amplitude, double dx, double dy = 0.0, double phase = 0.0,
                              int ramp_samples = 10);

/// Sets a constant virtual-Z rate on qubit q so that Phi_q(duration) = angle.
void set_virtual_z(PulseProgram& prog, int q, int num_qubits, double angle);

}  // namespace vqgo
