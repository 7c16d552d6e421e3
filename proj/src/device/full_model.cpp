// SPDX-License-Identifier: Apache-2.0
#include "vqgo/device/full_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"
#include "vqgo/device/qubit_model.hpp"

namespace vqgo {
namespace {

CMatrix embed_level_op(const CMatrix& op, int j, int n, int m) {
  std::vector<CMatrix> f(static_cast<std::size_t>(n), CMatrix::Identity(m, m));
  f[static_cast<std::size_t>(j)] = op;
  return kron_all(f);
}

}  // namespace

FullModel::FullModel(const DeviceModel& dev) : dev_(dev) {
  dev_.validate();
  const int n = dev_.n();
  const int m = dev_.levels;
  int full = 1;
  for (int j = 0; j < n; ++j) full *= m;

  std::vector<TransmonLevels> lv;
  for (int j = 0; j < n; ++j)
    lv.push_back(diagonalize_transmon(dev_.omega_h[static_cast<std::size_t>(j)], dev_.epsilon[static_cast<std::size_t>(j)], m,
                                      dev_.fock_dim));
  bare_ = transmon_spectrum(dev_);

  CMatrix h0 = CMatrix::Zero(full, full);
  std::vector<CMatrix> yprod;
  for (int j = 0; j < n; ++j) {
    CMatrix e = lv[static_cast<std::size_t>(j)].energy.cast<cplx>().asDiagonal();
    h0 += embed_level_op(e, j, n, m);
    yprod.push_back(embed_level_op(lv[static_cast<std::size_t>(j)].y, j, n, m));
  }
  for (int j = 0; j + 1 < n; ++j)
    h0 += dev_.coupling[static_cast<std::size_t>(j)] * yprod[static_cast<std::size_t>(j)] * yprod[static_cast<std::size_t>(j) + 1];
  h0 = 0.5 * (h0 + h0.adjoint());

  Eigen::SelfAdjointEigenSolver<CMatrix> es(h0);
  const int keep = dev_.global_truncation;
  CMatrix v = es.eigenvectors().leftCols(keep);
  energy_ = es.eigenvalues().head(keep).array() - es.eigenvalues()(0);

  // Label each dressed state by its dominant product state.
  occupation_.assign(static_cast<std::size_t>(keep), std::vector<int>(static_cast<std::size_t>(n), 0));
  std::vector<int> label(static_cast<std::size_t>(keep));
  for (int k = 0; k < keep; ++k) {
    Eigen::Index best = 0;
    v.col(k).cwiseAbs2().maxCoeff(&best);
    label[static_cast<std::size_t>(k)] = static_cast<int>(best);
    // Fix phases so the dominant product amplitude is real positive.
    const cplx a = v(best, k);
    v.col(k) *= std::abs(a) / a;
    int rest = static_cast<int>(best);
    for (int j = n - 1; j >= 0; --j) {
      occupation_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = rest % m;
      rest /= m;
    }
  }

  comp_.assign(static_cast<std::size_t>(1 << n), -1);
  for (int b = 0; b < (1 << n); ++b) {
    int prod = 0;
    for (int j = 0; j < n; ++j) prod = prod * m + ((b >> (n - 1 - j)) & 1);
    for (int k = 0; k < keep; ++k)
      if (label[static_cast<std::size_t>(k)] == prod) {
        if (comp_[static_cast<std::size_t>(b)] >= 0)
          fail(ErrorCategory::configuration, "FullModel: ambiguous dressed computational state");
        comp_[static_cast<std::size_t>(b)] = k;
      }
    if (comp_[static_cast<std::size_t>(b)] < 0)
      fail(ErrorCategory::configuration, "FullModel: computational state lost by truncation");
  }

  for (int j = 0; j < n; ++j) {
    CMatrix yd = v.adjoint() * yprod[static_cast<std::size_t>(j)] * v;
    yd = 0.5 * (yd + yd.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> ys(yd);
    y_.push_back(yd);
    y_vecs_.push_back(ys.eigenvectors());
    y_vals_.push_back(ys.eigenvalues());
  }

  const double e0 = energy_(comp_[0]);
  for (int j = 0; j < n; ++j) qfreq_.push_back(energy_(comp_[static_cast<std::size_t>(1 << (n - 1 - j))]) - e0);
}

CMatrix FullModel::hamiltonian(const std::vector<ChannelDrive>& drives, double t) const {
  CMatrix h = energy_.cast<cplx>().asDiagonal();
  for (const auto& c : drives) {
    const double f = c.amplitude * (c.eps * std::exp(cplx(0.0, c.carrier * t))).real();
    h += f * y_[static_cast<std::size_t>(c.target)];
  }
  return h;
}

CVector FullModel::frame_phases(double t) const {
  CVector ph(dim());
  for (int k = 0; k < dim(); ++k) {
    double w = 0.0;
    for (int j = 0; j < n(); ++j) w += occupation_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] * qfreq_[static_cast<std::size_t>(j)];
    ph(k) = std::exp(cplx(0.0, w * t));
  }
  return ph;
}

CMatrix FullModel::propagate(const DriveSource& drives, const CMatrix& psi, double t0, double t1, double dt,
                             const std::vector<double>& checkpoints,
                             const std::function<void(double, const CMatrix&)>& observe) const {
  require(t1 >= t0 && dt > 0.0, "FullModel::propagate: bad interval");
  require(psi.rows() == dim(), "FullModel::propagate: state dimension mismatch");
  std::vector<double> stops = checkpoints;
  std::sort(stops.begin(), stops.end());
  for (double s : stops) require(s > t0 && s <= t1 * (1 + 1e-12), "FullModel::propagate: checkpoint outside interval");
  if (stops.empty() || stops.back() < t1) stops.push_back(t1);

  const int n = this->n();
  CMatrix state = psi;
  std::vector<ChannelDrive> buf;
  std::vector<double> f(static_cast<std::size_t>(n));
  double t = t0;
  for (std::size_t s = 0; s < stops.size(); ++s) {
    const double span = stops[s] - t;
    const auto steps = std::max<long>(1, static_cast<long>(std::ceil(span / dt - 1e-9)));
    const double h = span / static_cast<double>(steps);
    CVector half(dim());
    for (int k = 0; k < dim(); ++k) half(k) = std::exp(cplx(0.0, -0.5 * h * energy_(k)));
    for (long k = 0; k < steps; ++k) {
      const double tm = t + (static_cast<double>(k) + 0.5) * h;
      drives(tm, buf);
      std::fill(f.begin(), f.end(), 0.0);
      for (const auto& c : buf)
        f[static_cast<std::size_t>(c.target)] += c.amplitude * (c.eps * std::exp(cplx(0.0, c.carrier * tm))).real();
      state = half.asDiagonal() * state;
      for (int j = 0; j < n; ++j) {
        const double fj = f[static_cast<std::size_t>(j)];
        if (fj == 0.0) continue;
        const auto& q = y_vecs_[static_cast<std::size_t>(j)];
        const auto& lam = y_vals_[static_cast<std::size_t>(j)];
        CVector ph(dim());
        for (int a = 0; a < dim(); ++a) ph(a) = std::exp(cplx(0.0, -fj * h * lam(a)));
        CMatrix tmp = q.adjoint() * state;
        tmp = ph.asDiagonal() * tmp;
        state.noalias() = q * tmp;
      }
      state = half.asDiagonal() * state;
    }
    t = stops[s];
    if (observe && s < checkpoints.size()) observe(t, state);
  }
  return state;
}

CMatrix build_lab_hamiltonian(const FullModel& model, const PulseProgram& prog, double t) {
  require(t >= 0.0 && t <= prog.duration * (1 + 1e-12), "build_lab_hamiltonian: time outside the program");
  prog.validate(model.n());
  return model.hamiltonian(prog.drives_at(t), t);
}

CMatrix build_lab_hamiltonian(const DeviceModel& dev, const PulseProgram& prog, double t) {
  return build_lab_hamiltonian(FullModel(dev), prog, t);
}

CMatrix computational_inputs(const FullModel& model) {
  const int c = 1 << model.n();
  CMatrix psi = CMatrix::Zero(model.dim(), c);
  for (int b = 0; b < c; ++b) psi(model.computational_index(b), b) = 1.0;
  return psi;
}

SubspaceUnitary qubit_subspace_unitary(const FullModel& model, const CMatrix& propagated, double t, double max_leakage) {
  const int c = 1 << model.n();
  require(propagated.rows() == model.dim(), "qubit_subspace_unitary: row count mismatch");
  CMatrix cols;
  if (propagated.cols() == c) {
    cols = propagated;
  } else {
    require(propagated.cols() == model.dim(), "qubit_subspace_unitary: expected 2^n or full columns");
    cols.resize(model.dim(), c);
    for (int b = 0; b < c; ++b) cols.col(b) = propagated.col(model.computational_index(b));
  }
  CMatrix block(c, c);
  for (int a = 0; a < c; ++a) block.row(a) = cols.row(model.computational_index(a));
  const CVector ph = model.frame_phases(t);
  for (int a = 0; a < c; ++a) block.row(a) *= ph(model.computational_index(a));

  Eigen::JacobiSVD<CMatrix> svd(block, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double smin = svd.singularValues().minCoeff();
  SubspaceUnitary out;
  out.leakage = 1.0 - smin * smin;
  if (out.leakage > max_leakage)
    fail(ErrorCategory::leakage, "qubit_subspace_unitary: leakage " + std::to_string(out.leakage) + " exceeds threshold");
  out.u = svd.matrixU() * svd.matrixV().adjoint();
  return out;
}

SubspaceUnitary qubit_subspace_unitary(const FullModel& model, const PulseProgram& prog, double dt, double max_leakage) {
  prog.validate(model.n());
  const auto src = prog.source();
  const CMatrix out = model.propagate(src, computational_inputs(model), 0.0, prog.duration, dt);
  auto r = qubit_subspace_unitary(model, out, prog.duration, max_leakage);
  r.u = software_frame(prog, model.n(), prog.duration) * r.u;
  return r;
}

}  // namespace vqgo
