// SPDX-License-Identifier: Apache-2.0
#include "vqgo/device/rates.hpp"

#include <cmath>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"
#include "vqgo/core/pauli.hpp"

namespace vqgo {
namespace {

struct FlatDrive {
  ChannelDrive base;
};

std::vector<FlatDrive> flat_drives(const PulseProgram& prog) {
  const int ns = prog.num_samples();
  const auto mid = static_cast<std::size_t>(ns / 2);
  std::vector<FlatDrive> out;
  for (const auto& ch : prog.channels) {
    const cplx env(ch.dx[mid], -ch.dy[mid]);
    out.push_back({{ch.target, ch.carrier, ch.amplitude, env * std::exp(cplx(0.0, ch.phase))}});
  }
  return out;
}

/// Drives rising over [0, ramp], flat, and falling over [t_fall, t_fall + ramp].
DriveSource ramped_source(const std::vector<FlatDrive>& flat, double ramp, double t_fall) {
  return [flat, ramp, t_fall](double t, std::vector<ChannelDrive>& out) {
    const double a = gaussian_rise(t, ramp) * gaussian_rise(t_fall + ramp - t, ramp);
    out.clear();
    for (const auto& f : flat) {
      ChannelDrive c = f.base;
      c.eps *= a;
      out.push_back(c);
    }
  };
}

double auto_step(const QubitModel& model, const std::vector<FlatDrive>& flat) {
  double norm = 0.0, osc = 0.0;
  for (double j : model.coupling) norm += std::abs(j);
  for (const auto& f : flat) {
    norm += 0.5 * f.base.amplitude * std::abs(f.base.eps);
    osc = std::max(osc, std::abs(f.base.carrier - model.freq[static_cast<std::size_t>(f.base.target)]));
  }
  for (int q = 0; q + 1 < model.n(); ++q)
    osc = std::max(osc, std::abs(model.freq[static_cast<std::size_t>(q)] - model.freq[static_cast<std::size_t>(q) + 1]));
  return step_for_norm(std::max(norm, osc), 0.1);
}

const std::vector<std::string>& default_terms(int n) {
  static const std::vector<std::string> none;
  if (n == 2) return cross_resonance_terms();
  if (n == 3) return three_qubit_terms();
  return none;
}

}  // namespace

double EffectiveRates::operator[](const std::string& label) const {
  const PauliString p(label);
  require(p.num_qubits() == n, "EffectiveRates: label size mismatch");
  return coefficients(p.index()).real();
}

const std::vector<std::string>& cross_resonance_terms() {
  static const std::vector<std::string> t{"II", "IX", "IY", "IZ", "ZI", "ZX", "ZY", "ZZ"};
  return t;
}

std::vector<std::string> cross_resonance_terms(int n, int control, int target) {
  require(control >= 0 && control < n && target >= 0 && target < n && control != target,
          "cross_resonance_terms: bad qubit pair");
  std::vector<std::string> out;
  for (const auto& t : cross_resonance_terms()) {
    std::string l(static_cast<std::size_t>(n), 'I');
    l[static_cast<std::size_t>(control)] = t[0];
    l[static_cast<std::size_t>(target)] = t[1];
    out.push_back(l);
  }
  return out;
}

const std::vector<std::string>& three_qubit_terms() {
  static const std::vector<std::string> t{"III", "ZII", "IIZ", "ZZI", "IZZ", "IXI", "ZXI", "IXZ"};
  return t;
}

EffectiveRates fit_effective_rates(const std::vector<CMatrix>& unitaries, double tau, const std::vector<std::string>& terms,
                                   double max_residual) {
  require(unitaries.size() >= 2, "fit_effective_rates: need at least two samples");
  require(tau > 0.0, "fit_effective_rates: tau must be positive");
  const Eigen::Index d = unitaries.front().rows();
  int n = 0;
  while ((Eigen::Index{1} << n) < d) ++n;

  // Cumulative generator L_k with L_0 = 0; the slope of L_k against t_k is H_eff.
  const std::size_t k_max = unitaries.size();
  std::vector<CMatrix> cum(k_max, CMatrix::Zero(d, d));
  for (std::size_t k = 1; k < k_max; ++k) {
    const CMatrix w = unitaries[k] * unitaries[k - 1].adjoint();
    cum[k] = cum[k - 1] + log_unitary(w);
  }
  double tbar = 0.0;
  for (std::size_t k = 0; k < k_max; ++k) tbar += static_cast<double>(k) * tau;
  tbar /= static_cast<double>(k_max);
  CMatrix lbar = CMatrix::Zero(d, d);
  for (const auto& c : cum) lbar += c;
  lbar /= static_cast<double>(k_max);
  CMatrix num = CMatrix::Zero(d, d);
  double den = 0.0;
  for (std::size_t k = 0; k < k_max; ++k) {
    const double dtk = static_cast<double>(k) * tau - tbar;
    num += dtk * (cum[k] - lbar);
    den += dtk * dtk;
  }
  const CMatrix h = num / den;

  EffectiveRates r;
  r.n = n;
  r.terms = terms;
  r.coefficients = pauli_coefficients(h);
  double inside = 0.0, outside = 0.0;
  const auto basis = pauli_basis(n);
  for (std::size_t k = 1; k < basis.size(); ++k) {
    const double w = std::norm(r.coefficients(static_cast<Eigen::Index>(k)));
    bool allowed = false;
    for (const auto& t : terms) allowed = allowed || t == basis[k].labels();
    (allowed ? inside : outside) += w;
  }
  r.residual = (inside + outside) > 0 ? std::sqrt(outside / (inside + outside)) : 0.0;
  if (r.residual > max_residual)
    fail(ErrorCategory::degenerate_fit,
         "effective-rate fit residual " + std::to_string(r.residual) + " exceeds " + std::to_string(max_residual));
  return r;
}

EffectiveRates extract_effective_rates(const QubitModel& model, const PulseProgram& prog, const RateExtractionOptions& opt) {
  model.validate();
  prog.validate(model.n());
  require(opt.points >= 2, "extract_effective_rates: need at least two points");
  const auto flat = flat_drives(prog);
  const double dt = opt.dt > 0.0 ? opt.dt : auto_step(model, flat);
  const auto& terms = opt.terms.empty() ? default_terms(model.n()) : opt.terms;

  std::vector<CMatrix> samples;
  const DriveSource rising = ramped_source(flat, opt.ramp, 1e300);
  CMatrix u = propagate_qubit_drives(model, rising, 0.0, opt.ramp, dt);
  double t = opt.ramp;
  for (int k = 0; k <= opt.points; ++k) {
    if (k > 0) {
      u = propagate_qubit_drives(model, rising, t, t + opt.interval, dt) * u;
      t += opt.interval;
    }
    const DriveSource falling = ramped_source(flat, opt.ramp, t);
    samples.push_back(propagate_qubit_drives(model, falling, t, t + opt.ramp, dt) * u);
  }
  return fit_effective_rates(samples, opt.interval, terms, opt.max_residual);
}

EffectiveRates extract_effective_rates(const FullModel& model, const PulseProgram& prog, const RateExtractionOptions& opt) {
  prog.validate(model.n());
  require(opt.points >= 2, "extract_effective_rates: need at least two points");
  const auto flat = flat_drives(prog);
  const double dt = opt.dt > 0.0 ? opt.dt : 4e-12;
  const auto& terms = opt.terms.empty() ? default_terms(model.n()) : opt.terms;

  std::vector<CMatrix> samples;
  const DriveSource rising = ramped_source(flat, opt.ramp, 1e300);
  CMatrix psi = model.propagate(rising, computational_inputs(model), 0.0, opt.ramp, dt);
  double t = opt.ramp;
  for (int k = 0; k <= opt.points; ++k) {
    if (k > 0) {
      psi = model.propagate(rising, psi, t, t + opt.interval, dt);
      t += opt.interval;
    }
    const DriveSource falling = ramped_source(flat, opt.ramp, t);
    const CMatrix out = model.propagate(falling, psi, t, t + opt.ramp, dt);
    samples.push_back(qubit_subspace_unitary(model, out, t + opt.ramp).u);
  }
  return fit_effective_rates(samples, opt.interval, terms, opt.max_residual);
}

}  // namespace vqgo
