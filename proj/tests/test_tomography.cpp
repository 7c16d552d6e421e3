#include <doctest.h>

#include <cmath>
#include <sstream>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"
#include "vqgo/core/pauli.hpp"
#include "vqgo/noise/readout.hpp"
#include "vqgo/tomography/chi_io.hpp"
#include "vqgo/tomography/oracle.hpp"
#include "vqgo/tomography/process_matrix.hpp"
#include "vqgo/tomography/process_tomography.hpp"
#include "vqgo/tomography/reduced.hpp"
#include "vqgo/tomography/sic.hpp"
#include "vqgo/tomography/zero_fidelity.hpp"

using namespace vqgo;

namespace {

ChannelMap depolarizing(double p, int n) {
  const int d = 1 << n;
  return [=](const CMatrix& rho) -> CMatrix {
    return (1.0 - p) * rho + p * rho.trace() * CMatrix::Identity(d, d) / static_cast<double>(d);
  };
}

double brute_zero_fidelity(const CMatrix& u, const ChannelMap& channel, int n) {
  const int d = 1 << n;
  const auto basis = pauli_basis(n);
  double s = 0.0;
  for (int i = 0; i < (1 << (2 * n)); ++i) {
    const CMatrix rho = sic_product(n, i);
    const CMatrix ideal = u * rho * u.adjoint();
    const CMatrix out = channel(rho);
    for (const auto& p : basis) {
      const CMatrix w = p.matrix() / std::sqrt(static_cast<double>(d));
      s += (ideal * w).trace().real() * (out * w).trace().real();
    }
  }
  return s / (static_cast<double>(d) * d);
}

}  // namespace

TEST_CASE("chi of a Pauli unitary is a single entry") {
  const ProcessMatrix p = chi_from_unitary(PauliString("XZ").matrix());
  const int k = PauliString("XZ").index();
  CHECK(std::abs(p.chi(k, k) - 1.0) < 1e-14);
  CHECK(std::abs(p.chi.trace() - 1.0) < 1e-14);
  CHECK(p.chi.cwiseAbs().sum() == doctest::Approx(1.0));
}

TEST_CASE("chi of the depolarizing channel") {
  const double p = 0.2;
  const ProcessMatrix chi = chi_from_channel(depolarizing(p, 1), 1);
  CHECK(chi.chi(0, 0).real() == doctest::Approx(1.0 - 0.75 * p));
  for (int k = 1; k < 4; ++k) CHECK(chi.chi(k, k).real() == doctest::Approx(0.25 * p));
  CHECK(trace_preservation_error(chi) < 1e-12);
}

TEST_CASE("chi from channel and from unitary agree and act alike") {
  std::mt19937_64 rng(17);
  const CMatrix u = random_unitary(4, rng);
  const ProcessMatrix a = chi_from_unitary(u);
  const ProcessMatrix b = chi_from_channel([&](const CMatrix& r) -> CMatrix { return u * r * u.adjoint(); }, 2);
  CHECK(chi_max_diff(a, b) < 1e-12);
  CHECK(process_fidelity(a, a) == doctest::Approx(1.0));
  const CMatrix rho = sic_product(2, 7);
  CHECK(max_abs_diff(apply_chi(a, rho), u * rho * u.adjoint()) < 1e-12);
}

TEST_CASE("SIC states have pairwise overlap one third") {
  const auto& s = sic_states();
  CMatrix sum = CMatrix::Zero(2, 2);
  for (int a = 0; a < 4; ++a) {
    sum += s[static_cast<std::size_t>(a)].matrix();
    for (int b = a + 1; b < 4; ++b) {
      const double o = (s[static_cast<std::size_t>(a)].matrix() * s[static_cast<std::size_t>(b)].matrix()).trace().real();
      CHECK(o == doctest::Approx(1.0 / 3.0));
    }
  }
  CHECK(max_abs_diff(sum, 2.0 * CMatrix::Identity(2, 2)) < 1e-14);
  CHECK(std::abs(s[0].matrix()(0, 0) - 1.0) < 1e-15);
}

TEST_CASE("exact tomography reconstructs unitary and noisy channels") {
  std::mt19937_64 rng(23);
  const CMatrix u = random_unitary(4, rng);
  const ProcessMatrix est = process_tomography(unitary_oracle(u), 2, kExactShots);
  CHECK(chi_max_diff(est, chi_from_unitary(u)) < 1e-10);

  const ChannelMap dep = depolarizing(0.1, 2);
  const ProcessMatrix d = process_tomography(MapOracle(2, dep), 2, kExactShots);
  CHECK(chi_max_diff(d, chi_from_channel(dep, 2)) < 1e-10);
  CHECK(full_tomography_expectation_count(2) == 240);
}

TEST_CASE("shot-noise tomography error shrinks with shots") {
  std::mt19937_64 rng(29);
  const CMatrix u = random_unitary(4, rng);
  const ProcessMatrix ref = chi_from_unitary(u);
  const double e1 = chi_max_diff(process_tomography(unitary_oracle(u, {}, 1), 2, 100), ref);
  const double e2 = chi_max_diff(process_tomography(unitary_oracle(u, {}, 1), 2, 10000), ref);
  CHECK(e2 < e1);
  CHECK(e2 < 0.03);
  const ProcessMatrix again = process_tomography(unitary_oracle(u, {}, 1), 2, 10000);
  CHECK(chi_max_diff(again, process_tomography(unitary_oracle(u, {}, 1), 2, 10000)) == 0.0);
}

TEST_CASE("reduced tomography is exact on the span") {
  const CMatrix u = expm(PauliString("ZX").matrix(), 0.6) * expm(PauliString("ZI").matrix(), -0.3) *
                    expm(PauliString("IX").matrix(), 0.1);
  REQUIRE(in_reduced_span(u));
  CHECK_FALSE(in_reduced_span(expm(PauliString("ZY").matrix(), 0.2)));
  const CMatrix target = expm(PauliString("ZX").matrix(), kPi / 4);
  const ReducedChi r = reduced_process_tomography(unitary_oracle(u), kExactShots);
  CHECK(max_abs_diff(r.m, reduced_chi_from_unitary(u).m) < 1e-12);
  const double overlap = reduced_overlap(r, reduced_chi_from_unitary(target));
  CHECK(overlap == doctest::Approx(process_fidelity(chi_from_unitary(u), chi_from_unitary(target))).epsilon(1e-9));
  CHECK(reduced_consumed_observables().size() == static_cast<std::size_t>(kReducedExpectationCount));
}

TEST_CASE("zero fidelity matches a brute-force sum") {
  std::mt19937_64 rng(31);
  const CMatrix target = expm(PauliString("ZX").matrix(), kPi / 4);
  const CMatrix v = expm(PauliString("ZX").matrix(), 0.6) * expm(PauliString("IY").matrix(), 0.2);
  const ChannelMap vmap = [&](const CMatrix& r) -> CMatrix { return v * r * v.adjoint(); };
  CHECK(zero_fidelity_exact(target, vmap) == doctest::Approx(brute_zero_fidelity(target, vmap, 2)).epsilon(1e-12));
  const ChannelMap tmap = [&](const CMatrix& r) -> CMatrix { return target * r * target.adjoint(); };
  CHECK(zero_fidelity_exact(target, tmap) == doctest::Approx(1.0));
  const ChannelMap dep = depolarizing(0.3, 2);
  const ChannelMap noisy = [&](const CMatrix& r) { return dep(tmap(r)); };
  CHECK(zero_fidelity_exact(target, noisy) == doctest::Approx(brute_zero_fidelity(target, noisy, 2)).epsilon(1e-12));
}

TEST_CASE("zero-fidelity estimate has zero variance on the target") {
  const CMatrix target = expm(PauliString("ZX").matrix(), kPi / 4);
  const ZeroFidelityPlan plan = make_zero_fidelity_plan(target, 200, 5);
  double norm = 0.0;
  for (const auto& s : plan.samples) norm += s.probability;
  CHECK(plan.samples.size() == 200);
  const Estimate e = zero_fidelity_estimate(plan, unitary_oracle(target), kExactShots);
  CHECK(e.value == doctest::Approx(1.0));
  CHECK(e.std_error < 1e-12);
}

TEST_CASE("zero-fidelity estimate is unbiased across plans") {
  const CMatrix target = expm(PauliString("ZX").matrix(), kPi / 4);
  const CMatrix v = expm(PauliString("ZX").matrix(), 0.55) * expm(PauliString("ZI").matrix(), 0.3);
  const double exact =
      zero_fidelity_exact(target, [&](const CMatrix& r) -> CMatrix { return v * r * v.adjoint(); });
  double mean = 0.0, m2 = 0.0;
  const int reps = 200;
  for (int k = 0; k < reps; ++k) {
    const double x = zero_fidelity_estimate(make_zero_fidelity_plan(target, 50, 100 + k), unitary_oracle(v),
                                            kExactShots)
                         .value;
    mean += x / reps;
    m2 += x * x / reps;
  }
  const double se = std::sqrt((m2 - mean * mean) / reps);
  CHECK(std::abs(mean - exact) < 4.0 * se + 1e-12);
}

TEST_CASE("zero-fidelity plans round trip through json") {
  const CMatrix target = expm(PauliString("XZ").matrix(), 0.3);
  const ZeroFidelityPlan plan = make_zero_fidelity_plan(target, 20, 9);
  const ZeroFidelityPlan back = zero_fidelity_plan_from_json(to_json(plan));
  REQUIRE(back.samples.size() == plan.samples.size());
  for (std::size_t k = 0; k < plan.samples.size(); ++k) {
    CHECK(back.samples[k].input == plan.samples[k].input);
    CHECK(back.samples[k].observable == plan.samples[k].observable);
    CHECK(back.samples[k].probability == plan.samples[k].probability);
  }
  CHECK(max_abs_diff(back.target, plan.target) == 0.0);
}

TEST_CASE("chi files round trip bit-exactly") {
  std::mt19937_64 rng(37);
  const ProcessMatrix p = chi_from_unitary(random_unitary(4, rng));
  std::stringstream ss;
  write_chi(ss, p, {{"scenario", "zx-gate"}});
  Metadata meta;
  const ProcessMatrix q = read_chi(ss, &meta);
  CHECK(q.n == 2);
  CHECK(chi_max_diff(p, q) == 0.0);
  CHECK(meta.at("scenario") == "zx-gate");
  std::stringstream bad("n 2\nlabels II\n");
  CHECK_THROWS_AS(read_chi(bad), Error);
}
