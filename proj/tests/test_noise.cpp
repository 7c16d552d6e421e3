#include <doctest.h>

#include <cmath>

#include "vqgo/core/density.hpp"
#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"
#include "vqgo/core/pauli.hpp"
#include "vqgo/device/pulse.hpp"
#include "vqgo/device/units.hpp"
#include "vqgo/noise/distortion.hpp"
#include "vqgo/noise/drift.hpp"
#include "vqgo/noise/readout.hpp"
#include "vqgo/noise/readout_calibration.hpp"
#include "vqgo/tomography/sic.hpp"

using namespace vqgo;

namespace {

// Symmetric readout flips attenuate a weight-w Pauli by (1 - 2p)^w, so the
// identity PTM is diagonal and its process fidelity factorizes per qubit.
double identity_fidelity_oracle(int n, double p) { return std::pow(1.0 - 1.5 * p, n); }

}  // namespace

TEST_CASE("ideal readout returns the exact expectation") {
  const CMatrix rho = sic_product(2, 9);
  for (const auto& p : pauli_basis(2)) {
    const double exact = (rho * p.matrix()).trace().real();
    CHECK(readout_expectation(rho, p, ReadoutModel::ideal()) == doctest::Approx(exact));
  }
}

TEST_CASE("symmetric readout attenuates by weight") {
  const double p = 0.07;
  const ReadoutModel r = ReadoutModel::symmetric(3, p);
  const CMatrix rho = sic_product(3, 37);
  for (const auto& s : pauli_basis(3)) {
    const double exact = (rho * s.matrix()).trace().real();
    CHECK(readout_expectation(rho, s, r) == doctest::Approx(exact * std::pow(1.0 - 2.0 * p, s.weight())));
  }
}

TEST_CASE("asymmetric readout biases Z on the ground state") {
  ReadoutModel r;
  r.p01 = {0.1};
  r.p10 = {0.3};
  const CMatrix g = projector(basis_state(2, 0));
  const CMatrix e = projector(basis_state(2, 1));
  CHECK(readout_expectation(g, PauliString("Z"), r) == doctest::Approx(0.8));
  CHECK(readout_expectation(e, PauliString("Z"), r) == doctest::Approx(-0.4));
  ReadoutModel bad;
  bad.p01 = {0.6};
  bad.p10 = {0.0};
  CHECK_THROWS_AS(bad.validate(1), Error);
}

TEST_CASE("shot sampling is seeded and converges") {
  const CMatrix rho = sic_product(2, 5);
  const PauliString obs("XZ");
  const ReadoutModel r = ReadoutModel::symmetric(2, 0.02);
  const double exact = readout_expectation(rho, obs, r);
  CHECK(sample_shots(rho, obs, 1000, r, 4) == sample_shots(rho, obs, 1000, r, 4));
  const double est = sample_shots(rho, obs, 200000, r, 4);
  CHECK(std::abs(est - exact) < 5.0 / std::sqrt(200000.0));
}

TEST_CASE("identity tomography fidelity matches the factorized oracle") {
  for (double p : {0.0, 0.01, 0.033}) {
    CHECK(identity_tomography_fidelity(1, ReadoutModel::symmetric(1, p)) ==
          doctest::Approx(identity_fidelity_oracle(1, p)));
    CHECK(identity_tomography_fidelity(2, ReadoutModel::symmetric(2, p)) ==
          doctest::Approx(identity_fidelity_oracle(2, p)));
  }
}

TEST_CASE("readout calibration hits the baseline") {
  const ReadoutModel r = calibrate_readout_to_baseline(0.95, 2);
  CHECK(identity_tomography_fidelity(2, r) == doctest::Approx(0.95).epsilon(1e-5));
  CHECK(r.flip01(0) == doctest::Approx((1.0 - std::sqrt(0.95)) / 1.5).epsilon(1e-4));
  CHECK(identity_tomography_fidelity(3, ReadoutModel::symmetric(3, r.flip01(0))) ==
        doctest::Approx(std::pow(0.95, 1.5)).epsilon(1e-4));
  try {
    calibrate_readout_to_baseline(0.3, 2);
    FAIL("baseline outside (0.5, 1] accepted");
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::invalid_argument);
  }
}

TEST_CASE("line distortion") {
  PulseProgram prog = make_program(units::ns(100), units::ns(1));
  prog.channels.push_back(constant_channel(prog, "cr", 0, 1, 0.0, units::mhz(60), 0.5, 0.0, 0.2));
  prog.channels.push_back(constant_channel(prog, "target", 1, 1, 0.0, units::mhz(1), 0.1));

  const PulseProgram same = apply_distortion(prog, {});
  CHECK(same.channels[0].phase == prog.channels[0].phase);

  LineDistortion d;
  d.lines["cr"] = {0.3, 0.9};
  const PulseProgram out = apply_distortion(prog, d);
  CHECK(out.channels[0].phase == doctest::Approx(0.5));
  CHECK(out.channels[0].amplitude == doctest::Approx(0.9 * units::mhz(60)));
  CHECK(out.channels[1].phase == prog.channels[1].phase);

  LineDistortion bend;
  bend.kappa = 0.4;
  bend.threshold = units::mhz(10);
  const PulseProgram bent = apply_distortion(prog, bend);
  CHECK(bent.channels[0].phase == doctest::Approx(0.2));
  CHECK(bent.channels[1].phase == doctest::Approx(0.4 * (1.0 - 0.1 / 10.0)));

  LineDistortion broken;
  broken.kappa = 0.1;
  CHECK_THROWS_AS(apply_distortion(prog, broken), Error);
}

TEST_CASE("frozen drift stays at zero") {
  DriftProcess p;
  p.seed = 3;
  CHECK(p.frozen());
  const DriftState s = drift_step(DriftState::zero(3, 2, 3), p, 100);
  for (double x : s.frequency) CHECK(x == 0.0);
  for (double x : s.line_phase) CHECK(x == 0.0);
}

TEST_CASE("drift increments do not depend on how ticks are split") {
  DriftProcess p{units::mhz(1e-3), 0.01, 0.02, 432.0, 77};
  const DriftState z = DriftState::zero(3, 2, 3);
  const DriftState whole = drift_step(z, p, 50);
  const DriftState split = drift_step(drift_step(z, p, 20), p, 30, 20);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(whole.frequency[k] == doctest::Approx(split.frequency[k]).epsilon(1e-12));
    CHECK(whole.line_phase[k] == doctest::Approx(split.line_phase[k]).epsilon(1e-12));
  }
  for (std::size_t k = 0; k < 2; ++k) CHECK(whole.coupling[k] == doctest::Approx(split.coupling[k]).epsilon(1e-12));
}

TEST_CASE("random-walk variance grows linearly in ticks") {
  const double step = 0.02;
  const long ticks = 64;
  double m2 = 0.0;
  int count = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    DriftProcess p{0.0, 0.0, step, 1.0, seed};
    for (double x : drift_step(DriftState::zero(0, 0, 3), p, ticks).line_phase) {
      m2 += x * x;
      ++count;
    }
  }
  const double var = m2 / count;
  const double expected = ticks * step * step;
  CHECK(std::abs(var - expected) < 5.0 * expected * std::sqrt(2.0 / count));
}
