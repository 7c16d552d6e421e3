#include <doctest.h>

#include <cmath>
#include <set>

#include "vqgo/core/density.hpp"
#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"
#include "vqgo/core/pauli.hpp"
#include "vqgo/core/propagate.hpp"
#include "vqgo/core/rng.hpp"

using namespace vqgo;

TEST_CASE("pauli products follow XY = iZ") {
  const CMatrix& x = pauli_matrix('X');
  const CMatrix& y = pauli_matrix('Y');
  const CMatrix& z = pauli_matrix('Z');
  CHECK(max_abs_diff(x * y, kI * z) < 1e-15);
  CHECK(max_abs_diff(y * z, kI * x) < 1e-15);
  CHECK(max_abs_diff(z * x, kI * y) < 1e-15);
}

TEST_CASE("leftmost label acts on the most significant bit") {
  const CMatrix zi = PauliString("ZI").matrix();
  CHECK(zi(0, 0).real() == doctest::Approx(1.0));
  CHECK(zi(1, 1).real() == doctest::Approx(1.0));
  CHECK(zi(2, 2).real() == doctest::Approx(-1.0));
  CHECK(zi(3, 3).real() == doctest::Approx(-1.0));
  CHECK(max_abs_diff(PauliString("XZ").matrix(), kron(pauli_matrix('X'), pauli_matrix('Z'))) < 1e-15);
}

TEST_CASE("pauli basis ordering and indices") {
  const auto b = pauli_basis(2);
  REQUIRE(b.size() == 16);
  CHECK(b[0].labels() == "II");
  CHECK(b[1].labels() == "IX");
  CHECK(b[4].labels() == "XI");
  CHECK(b[15].labels() == "ZZ");
  for (int k = 0; k < 16; ++k) {
    CHECK(b[static_cast<std::size_t>(k)].index() == k);
    CHECK(PauliString::from_index(2, k) == b[static_cast<std::size_t>(k)]);
  }
  CHECK(PauliString("XIZ").weight() == 2);
  CHECK_THROWS_AS(PauliString("XQ"), Error);
}

TEST_CASE("pauli coefficients round trip") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 3; ++n) {
    const CMatrix m = random_unitary(1 << n, rng);
    CHECK(max_abs_diff(from_pauli_coefficients(pauli_coefficients(m)), m) < 1e-12);
  }
}

TEST_CASE("expm matches the closed form for a Pauli generator") {
  const double theta = 0.37;
  const CMatrix u = expm(pauli_matrix('X'), theta);
  const CMatrix ref = std::cos(theta) * CMatrix::Identity(2, 2) - kI * std::sin(theta) * pauli_matrix('X');
  CHECK(max_abs_diff(u, ref) < 1e-14);
}

TEST_CASE("log_unitary inverts expm") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix h = 0.5 * random_hermitian(4, rng);
    const CMatrix u = expm(h, 1.0);
    const CMatrix g = log_unitary(u);
    CHECK(is_hermitian(g, 1e-10));
    CHECK(max_abs_diff(expm(g, 1.0), u) < 1e-10);
  }
}

TEST_CASE("random and projected unitaries are unitary") {
  std::mt19937_64 rng(5);
  const CMatrix u = random_unitary(8, rng);
  CHECK(is_unitary(u));
  CHECK(max_abs_diff(closest_unitary(u), u) < 1e-12);
  const CMatrix noisy = u + 1e-3 * random_hermitian(8, rng);
  CHECK(is_unitary(closest_unitary(noisy)));
}

TEST_CASE("piecewise propagation of a constant generator equals expm") {
  std::mt19937_64 rng(8);
  const CMatrix h = random_hermitian(4, rng);
  const CMatrix u = propagate_piecewise([&](double) { return h; }, 0.0, 2.0, 0.01);
  CHECK(max_abs_diff(u, expm(h, 2.0)) < 1e-11);
}

TEST_CASE("commuting time-dependent generator integrates its envelope") {
  const CMatrix z = pauli_matrix('Z');
  auto f = [](double t) { return std::sin(t) + 0.5; };
  int steps = 0;
  const CMatrix u = propagate_piecewise([&](double t) -> CMatrix { return f(t) * z; }, 0.0, 3.0, 1e-3,
                                        [&](double, const CMatrix&) { ++steps; });
  const double area = 1.0 - std::cos(3.0) + 1.5;
  CHECK(steps >= 3000);
  CHECK(max_abs_diff(u, expm(z, area)) < 1e-6);
}

TEST_CASE("density matrices are validated") {
  const DensityMatrix rho = DensityMatrix::pure(basis_state(4, 2));
  CHECK(rho.purity() == doctest::Approx(1.0));
  CHECK_THROWS_AS(DensityMatrix(CMatrix::Identity(2, 2)), Error);
  CMatrix neg = CMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{neg}, Error);
}

TEST_CASE("derived seeds are deterministic and path sensitive") {
  CHECK(derive_seed(1, {2, 3}) == derive_seed(1, {2, 3}));
  std::set<std::uint64_t> seen;
  for (std::uint64_t a = 0; a < 8; ++a)
    for (std::uint64_t b = 0; b < 8; ++b) seen.insert(derive_seed(42, {a, b}));
  CHECK(seen.size() == 64);
  CHECK(derive_seed(1, {2, 3}) != derive_seed(1, {3, 2}));
  CHECK(derive_seed(1, {2}) != derive_seed(2, {2}));
}

TEST_CASE("error categories have distinct names and exit codes") {
  const ErrorCategory all[] = {ErrorCategory::invalid_argument, ErrorCategory::configuration,
                               ErrorCategory::calibration,      ErrorCategory::conditioning,
                               ErrorCategory::leakage,          ErrorCategory::degenerate_fit,
                               ErrorCategory::io,               ErrorCategory::replay_mismatch};
  std::set<int> codes;
  std::set<std::string_view> names;
  for (auto c : all) {
    CHECK(exit_code(c) > 1);
    codes.insert(exit_code(c));
    names.insert(category_name(c));
  }
  CHECK(codes.size() == 8);
  CHECK(names.size() == 8);
  CHECK(exit_code(ErrorCategory::invalid_argument) == 2);
}
