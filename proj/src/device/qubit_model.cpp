// SPDX-License-Identifier: Apache-2.0
#include "vqgo/device/qubit_model.hpp"

#include <cmath>
#include <Eigen/Eigenvalues>
#include <sstream>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"
#include "vqgo/core/pauli.hpp"

namespace vqgo {
namespace {

CMatrix sigma_plus() {
  CMatrix s = CMatrix::Zero(2, 2);
  s(1, 0) = 1.0;  // |1><0|
  return s;
}

struct OperatorTable {
  std::vector<CMatrix> x, y, z, sp;
};

/// Single-qubit operators embedded in n-qubit registers, built once per size.
const OperatorTable& operators(int n) {
  static const std::vector<OperatorTable> tables = [] {
    std::vector<OperatorTable> t(7);
    for (int m = 1; m <= 6; ++m)
      for (int q = 0; q < m; ++q) {
        t[static_cast<std::size_t>(m)].x.push_back(embed(pauli_matrix('X'), q, m));
        t[static_cast<std::size_t>(m)].y.push_back(embed(pauli_matrix('Y'), q, m));
        t[static_cast<std::size_t>(m)].z.push_back(embed(pauli_matrix('Z'), q, m));
        t[static_cast<std::size_t>(m)].sp.push_back(embed(sigma_plus(), q, m));
      }
    return t;
  }();
  require(n >= 1 && n <= 6, "qubit model: 1 to 6 qubits supported");
  return tables[static_cast<std::size_t>(n)];
}

}  // namespace

CMatrix embed(const CMatrix& op, int q, int n) {
  std::vector<CMatrix> f(static_cast<std::size_t>(n), CMatrix::Identity(2, 2));
  f[static_cast<std::size_t>(q)] = op;
  return kron_all(f);
}

void QubitModel::validate() const {
  require(n() >= 1, "QubitModel: at least one qubit");
  require(static_cast<int>(coupling.size()) == n() - 1, "QubitModel: need one coupling per adjacent pair");
}

double QubitModel::coupling_ratio() const {
  double r = 0.0;
  for (int i = 0; i + 1 < n(); ++i) {
    const double det = std::abs(freq[static_cast<std::size_t>(i)] - freq[static_cast<std::size_t>(i) + 1]);
    r = std::max(r, det > 0 ? std::abs(coupling[static_cast<std::size_t>(i)]) / det : INFINITY);
  }
  return r;
}

std::vector<std::string> QubitModel::warnings() const {
  std::vector<std::string> w;
  if (coupling_ratio() > 0.1) {
    std::ostringstream os;
    os << "coupling-to-detuning ratio " << coupling_ratio() << " exceeds 0.1";
    w.push_back(os.str());
  }
  return w;
}

CMatrix qubit_hamiltonian(const QubitModel& model, const std::vector<ChannelDrive>& drives, double t, Frame frame) {
  const int n = model.n();
  const int d = 1 << n;
  const OperatorTable& op = operators(n);
  CMatrix h = CMatrix::Zero(d, d);
  if (frame == Frame::lab) {
    for (int q = 0; q < n; ++q) h += -0.5 * model.freq[static_cast<std::size_t>(q)] * op.z[static_cast<std::size_t>(q)];
    for (int q = 0; q + 1 < n; ++q)
      h += model.coupling[static_cast<std::size_t>(q)] * op.y[static_cast<std::size_t>(q)] * op.y[static_cast<std::size_t>(q) + 1];
    for (const auto& c : drives) {
      const double f = c.amplitude * (c.eps * std::exp(cplx(0.0, c.carrier * t))).real();
      h += f * op.x[static_cast<std::size_t>(c.target)];
    }
    return h;
  }
  for (int q = 0; q + 1 < n; ++q) {
    const auto a = static_cast<std::size_t>(q);
    const double dw = model.freq[a] - model.freq[a + 1];
    const CMatrix ff = (model.coupling[a] * std::exp(cplx(0.0, dw * t))) * (op.sp[a] * op.sp[a + 1].adjoint());
    h += ff + ff.adjoint();
  }
  for (const auto& c : drives) {
    const auto q = static_cast<std::size_t>(c.target);
    const double delta = c.carrier - model.freq[q];
    const cplx e = c.eps * std::exp(cplx(0.0, delta * t));
    h += (0.5 * c.amplitude * e.real()) * op.x[q] - (0.5 * c.amplitude * e.imag()) * op.y[q];
  }
  return h;
}

CMatrix build_qubit_hamiltonian(const QubitModel& model, const PulseProgram& prog, double t, Frame frame) {
  require(t >= 0.0 && t <= prog.duration * (1 + 1e-12), "build_qubit_hamiltonian: time outside the program");
  return qubit_hamiltonian(model, prog.drives_at(t), t, frame);
}

CMatrix rotating_frame(const QubitModel& model, double t) {
  const int n = model.n();
  std::vector<CMatrix> f;
  for (int q = 0; q < n; ++q) {
    const double w = model.freq[static_cast<std::size_t>(q)];
    CMatrix r = CMatrix::Zero(2, 2);
    r(0, 0) = std::exp(cplx(0.0, -0.5 * w * t));
    r(1, 1) = std::exp(cplx(0.0, 0.5 * w * t));
    f.push_back(r);
  }
  return kron_all(f);
}

CMatrix software_frame(const PulseProgram& prog, int n, double t) {
  std::vector<CMatrix> f;
  for (int q = 0; q < n; ++q) {
    const double phi = prog.frame_phase(q, t);
    CMatrix r = CMatrix::Zero(2, 2);
    r(0, 0) = std::exp(cplx(0.0, 0.5 * phi));
    r(1, 1) = std::exp(cplx(0.0, -0.5 * phi));
    f.push_back(r);
  }
  return kron_all(f);
}

double qubit_model_step(const QubitModel& model, const PulseProgram& prog, Frame frame, double budget) {
  double norm = 0.0;
  double osc = 0.0;
  for (double j : model.coupling) norm += std::abs(j);
  for (const auto& ch : prog.channels) {
    double peak = 0.0;
    for (std::size_t k = 0; k < ch.dx.size(); ++k) peak = std::max(peak, std::hypot(ch.dx[k], ch.dy[k]));
    norm += 0.5 * ch.amplitude * peak;
    osc = std::max(osc, std::abs(ch.carrier - model.freq[static_cast<std::size_t>(ch.target)]));
  }
  for (int q = 0; q + 1 < model.n(); ++q)
    osc = std::max(osc, std::abs(model.freq[static_cast<std::size_t>(q)] - model.freq[static_cast<std::size_t>(q) + 1]));
  if (frame == Frame::lab) {
    for (double w : model.freq) norm += 0.5 * std::abs(w);
    for (const auto& ch : prog.channels) osc = std::max(osc, std::abs(ch.carrier));
  }
  for (const auto& row : prog.dz)
    for (double r : row) osc = std::max(osc, 2.0 * std::abs(r));
  return step_for_norm(std::max(norm, osc), budget);
}

CMatrix propagate_qubit_drives(const QubitModel& model, const DriveSource& drives, double t0, double t1, double dt,
                               const StepObserver& observer) {
  std::vector<ChannelDrive> buf;
  auto h = [&](double t) {
    drives(t, buf);
    return qubit_hamiltonian(model, buf, t, Frame::rotating);
  };
  return propagate_piecewise(h, t0, t1, dt, observer);
}

CMatrix propagate_qubit_model(const QubitModel& model, const PulseProgram& prog, Frame frame,
                              const PropagationOptions& opt) {
  model.validate();
  prog.validate(model.n());
  double dt = opt.dt > 0.0 ? opt.dt : qubit_model_step(model, prog, frame, opt.norm_budget);
  // Never straddle a sample boundary with one step.
  const int ns = prog.num_samples();
  const int per_sample = std::max(1, static_cast<int>(std::ceil(prog.sample_period / dt - 1e-9)));
  dt = prog.sample_period / per_sample;
  (void)ns;
  const DriveSource src = prog.source();
  std::vector<ChannelDrive> buf;
  auto h = [&](double t) {
    src(t, buf);
    return qubit_hamiltonian(model, buf, t, frame);
  };
  CMatrix u = propagate_piecewise(h, 0.0, prog.duration, dt);
  if (frame == Frame::lab) u = rotating_frame(model, prog.duration) * u;
  return software_frame(prog, model.n(), prog.duration) * u;
}

std::vector<double> dressed_frequencies(const QubitModel& model) {
  model.validate();
  const int n = model.n();
  RMatrix h = RMatrix::Zero(n, n);
  for (int q = 0; q < n; ++q) h(q, q) = model.freq[static_cast<std::size_t>(q)];
  for (int q = 0; q + 1 < n; ++q) h(q, q + 1) = h(q + 1, q) = model.coupling[static_cast<std::size_t>(q)];
  const Eigen::SelfAdjointEigenSolver<RMatrix> es(h);
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    Eigen::Index q = 0;
    es.eigenvectors().col(k).cwiseAbs().maxCoeff(&q);
    out[static_cast<std::size_t>(q)] = es.eigenvalues()(k);
  }
  return out;
}

void track_dressed_frames(PulseProgram& prog, const QubitModel& model) {
  const auto dressed = dressed_frequencies(model);
  const int ns = prog.num_samples();
  if (prog.dz.empty()) prog.dz.assign(static_cast<std::size_t>(model.n()), {});
  for (int q = 0; q < model.n(); ++q) {
    auto& row = prog.dz[static_cast<std::size_t>(q)];
    if (row.empty()) row.assign(static_cast<std::size_t>(ns), 0.0);
    const double shift = dressed[static_cast<std::size_t>(q)] - model.freq[static_cast<std::size_t>(q)];
    for (double& r : row) r -= 0.5 * shift;
  }
}

}  // namespace vqgo
