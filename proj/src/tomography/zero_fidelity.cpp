// SPDX-License-Identifier: Apache-2.0
#include "vqgo/tomography/zero_fidelity.hpp"

#include <cmath>
#include <random>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"
#include "vqgo/core/pauli.hpp"
#include "vqgo/core/rng.hpp"
#include "vqgo/tomography/sic.hpp"

namespace vqgo {
namespace {

int qubits_of(const CMatrix& u) {
  int n = 0;
  while ((1 << n) < u.rows()) ++n;
  require(n >= 1 && (1 << n) == u.rows() && u.rows() == u.cols(), "zero fidelity: dimension is not 2^n");
  return n;
}

/// ideal(i, j) for every pair, row i = SIC product, column j = Pauli.
RMatrix ideal_table(const CMatrix& u, int n) {
  const int count = 1 << (2 * n);
  const double sqrt_d = std::sqrt(static_cast<double>(1 << n));
  const auto basis = pauli_basis(n);
  std::vector<CMatrix> mats;
  for (const auto& p : basis) mats.push_back(p.matrix());
  RMatrix a(count, count);
  for (int i = 0; i < count; ++i) {
    const CMatrix out = u * sic_product(n, i) * u.adjoint();
    for (int j = 0; j < count; ++j)
      a(i, j) = (out * mats[static_cast<std::size_t>(j)]).trace().real() / sqrt_d;
  }
  return a;
}

}  // namespace

ZeroFidelityPlan make_zero_fidelity_plan(const CMatrix& target, int l, std::uint64_t seed) {
  require(l >= 1, "make_zero_fidelity_plan: l must be >= 1");
  require(is_unitary(target, 1e-8), "make_zero_fidelity_plan: target is not unitary");
  const int n = qubits_of(target);
  const RMatrix a = ideal_table(target, n);
  const int count = static_cast<int>(a.rows());

  // For pure inputs sum_j ideal^2 = 1, so the squared ideals sum to d^2 and
  // Pr = ideal^2 / d^2 is already normalized; the explicit sum guards rounding.
  std::vector<double> w(static_cast<std::size_t>(count * count));
  double total = 0.0;
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      const double v = a(i, j) * a(i, j);
      const double wij = v > 1e-24 ? v : 0.0;
      w[static_cast<std::size_t>(i * count + j)] = wij;
      total += wij;
    }

  ZeroFidelityPlan plan;
  plan.n = n;
  plan.target = target;
  plan.l = l;
  plan.seed = seed;
  plan.normalization = total;
  std::mt19937_64 rng(derive_seed(seed, {0x7a65726fULL}));
  std::discrete_distribution<int> pick(w.begin(), w.end());
  plan.samples.reserve(static_cast<std::size_t>(l));
  for (int s = 0; s < l; ++s) {
    const int k = pick(rng);
    const int i = k / count;
    const int j = k % count;
    plan.samples.push_back({i, j, a(i, j), w[static_cast<std::size_t>(k)] / total});
  }
  return plan;
}

double zero_fidelity_exact(const CMatrix& target, const ChannelMap& channel) {
  const int n = qubits_of(target);
  const int count = 1 << (2 * n);
  const double d = static_cast<double>(1 << n);
  // sum_j tr[A W_j] tr[B W_j] = tr[A B] for Hermitian A, B.
  double f = 0.0;
  for (int i = 0; i < count; ++i) {
    const CMatrix rho = sic_product(n, i);
    f += (target * rho * target.adjoint() * channel(rho)).trace().real();
  }
  return f / (d * d);
}

Estimate zero_fidelity_estimate(const ZeroFidelityPlan& plan, const ChannelOracle& oracle, int shots,
                                std::uint64_t task_base) {
  require(plan.l >= 1 && static_cast<int>(plan.samples.size()) == plan.l, "zero_fidelity_estimate: malformed plan");
  require(oracle.num_qubits() == plan.n, "zero_fidelity_estimate: qubit count mismatch");
  const double sqrt_d = std::sqrt(static_cast<double>(1 << plan.n));
  std::vector<double> x(plan.samples.size());
  for (std::size_t s = 0; s < plan.samples.size(); ++s) {
    const auto& smp = plan.samples[s];
    const auto obs = PauliString::from_index(plan.n, smp.observable);
    const double e = oracle.expectation(sic_product(plan.n, smp.input), obs, shots, task_base + s);
    x[s] = (e / sqrt_d) / smp.ideal;
  }
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  double var = 0.0;
  for (double v : x) var += (v - mean) * (v - mean);
  const double l = static_cast<double>(x.size());
  const double sd = x.size() > 1 ? std::sqrt(var / (l - 1.0)) : 0.0;
  return {mean, sd / std::sqrt(l)};
}

nlohmann::json to_json(const ZeroFidelityPlan& plan) {
  nlohmann::json j;
  j["n"] = plan.n;
  j["l"] = plan.l;
  j["seed"] = plan.seed;
  j["normalization"] = plan.normalization;
  nlohmann::json t = nlohmann::json::array();
  for (Eigen::Index r = 0; r < plan.target.rows(); ++r)
    for (Eigen::Index c = 0; c < plan.target.cols(); ++c)
      t.push_back({plan.target(r, c).real(), plan.target(r, c).imag()});
  j["target"] = t;
  nlohmann::json s = nlohmann::json::array();
  for (const auto& smp : plan.samples)
    s.push_back({{"input", smp.input}, {"observable", smp.observable}, {"ideal", smp.ideal}, {"probability", smp.probability}});
  j["samples"] = s;
  return j;
}

ZeroFidelityPlan zero_fidelity_plan_from_json(const nlohmann::json& j) {
  ZeroFidelityPlan plan;
  plan.n = j.at("n").get<int>();
  plan.l = j.at("l").get<int>();
  plan.seed = j.at("seed").get<std::uint64_t>();
  plan.normalization = j.at("normalization").get<double>();
  const int d = 1 << plan.n;
  const auto& t = j.at("target");
  require(static_cast<int>(t.size()) == d * d, "zero fidelity plan: target size mismatch");
  plan.target.resize(d, d);
  for (int k = 0; k < d * d; ++k) plan.target(k / d, k % d) = cplx(t[k][0].get<double>(), t[k][1].get<double>());
  for (const auto& s : j.at("samples"))
    plan.samples.push_back({s.at("input").get<int>(), s.at("observable").get<int>(), s.at("ideal").get<double>(),
                            s.at("probability").get<double>()});
  return plan;
}

}  // namespace vqgo
