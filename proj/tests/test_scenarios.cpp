#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"
#include "vqgo/core/pauli.hpp"
#include "vqgo/device/floquet.hpp"
#include "vqgo/device/rates.hpp"
#include "vqgo/device/units.hpp"
#include "vqgo/scenarios/artifacts.hpp"
#include "vqgo/scenarios/calibration.hpp"
#include "vqgo/scenarios/common.hpp"
#include "vqgo/scenarios/config.hpp"
#include "vqgo/scenarios/drift_study.hpp"
#include "vqgo/scenarios/floquet_scenario.hpp"
#include "vqgo/scenarios/identity.hpp"
#include "vqgo/scenarios/runner.hpp"
#include "vqgo/scenarios/three_qubit.hpp"
#include "vqgo/scenarios/zx.hpp"

using namespace vqgo;
namespace fs = std::filesystem;

namespace {

std::string scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("vqgo_test_" + name);
  fs::remove_all(p);
  return p.string();
}

ErrorCategory category_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.category();
  }
  FAIL("no error raised");
  return ErrorCategory::io;
}

}  // namespace

TEST_CASE("config dump and parse round trip for every scenario") {
  for (auto k : {ScenarioKind::phase_calibration, ScenarioKind::omega_c_calibration, ScenarioKind::zx_gate,
                 ScenarioKind::zx1_1yz_gate, ScenarioKind::floquet_zyz, ScenarioKind::identity_baseline,
                 ScenarioKind::drift_study}) {
    ScenarioConfig c = default_config(k);
    c.seed = 12345678901234ULL;
    c.noise.distortion.lines["cr"] = {0.1 / 3.0, 0.97};
    const std::string text = dump_config(c);
    CHECK(dump_config(parse_config(text)) == text);
    CHECK(parse_scenario(scenario_name(k)) == k);
  }
}

TEST_CASE("config errors are configuration errors") {
  CHECK(category_of([] { parse_config("scenario: zx-gate\nunknown: 1\n"); }) == ErrorCategory::configuration);
  CHECK(category_of([] { parse_config("scenario: nonsense\n"); }) == ErrorCategory::configuration);
  CHECK(category_of([] { parse_config("scenario: zx-gate\npulse: {duration_ns: -4}\n"); }) ==
        ErrorCategory::configuration);
  CHECK(category_of([] { parse_config("scenario: [unclosed\n"); }) == ErrorCategory::configuration);
}

TEST_CASE("reduced figure of merit is legal only for the ZX span") {
  ScenarioConfig c = default_config(ScenarioKind::zx1_1yz_gate);
  c.figure_of_merit = FigureOfMerit::reduced_chi;
  CHECK(category_of([&] { c.validate(); }) == ErrorCategory::configuration);
  c = default_config(ScenarioKind::floquet_zyz);
  c.figure_of_merit = FigureOfMerit::reduced_chi;
  CHECK(category_of([&] { c.validate(); }) == ErrorCategory::configuration);
  default_config(ScenarioKind::zx_gate).validate();
}

TEST_CASE("figures of merit agree on a span gate without noise") {
  const CMatrix target = zx_target(1.0);
  const CMatrix u = expm(PauliString("ZX").matrix(), kPi / 4 - 0.2) * expm(PauliString("ZI").matrix(), 0.1);
  const double exact = unitary_fidelity(u, target);
  const TomographyConfig t{0, 200, 0};
  CHECK(measure_figure_of_merit(FigureOfMerit::reduced_chi, u, target, {}, t, 1).value ==
        doctest::Approx(exact).epsilon(1e-9));
  CHECK(measure_figure_of_merit(FigureOfMerit::exact, u, target, {}, t, 1).value == doctest::Approx(exact));
}

TEST_CASE("phase calibration removes an injected line phase") {
  const ScenarioConfig c = default_config(ScenarioKind::phase_calibration);
  for (double injected : {0.7, -0.7}) {
    CrSetup s = cr_setup(c, 0, 1);
    s.distortion.lines[s.channel] = {injected, 1.0};
    const CalibrationResult r = calibrate_phase(s, phase_calibration_options(c, 3));
    REQUIRE(r.ok);
    CHECK(r.values.at("phase") == doctest::Approx(-injected).epsilon(1e-3));

    CrParams p;
    p.d1 = c.pulse.calibration_amplitude;
    p.phase = r.values.at("phase");
    RateExtractionOptions ro;
    ro.terms = cross_resonance_terms();
    const EffectiveRates rates = extract_effective_rates(s.model, cr_program(s, p), ro);
    CHECK(std::abs(rates["ZY"] / rates["ZX"]) <= 0.02);
  }
}

TEST_CASE("compensation is not needed when the side drive has no 1X1 term") {
  FloquetQubitTier t;
  t.c_zx = units::mhz(0.2);
  t.drive = make_floquet_drive({0.0}, units::mhz(1.0), 1);
  const double time = units::us(0.5);
  const CMatrix u = t.propagate(0.0, time);
  // Central-qubit rotation with the spectator Q1 in |0> (rows/cols 0, 2) and |1> (4, 6); Q3 in |0>.
  const double r0 = std::acos(std::clamp(std::abs(u(0, 0)), 0.0, 1.0)) / time;
  const double r1 = std::acos(std::clamp(std::abs(u(4, 4)), 0.0, 1.0)) / time;
  CHECK(std::abs(r0 - r1) <= 0.01 * std::abs(r0));
}

TEST_CASE("identity baseline brackets the three-qubit fidelity") {
  const IdentityBaseline b = run_identity_baseline(default_config(ScenarioKind::identity_baseline));
  CHECK(b.fidelity2 == doctest::Approx(0.95).epsilon(0.005));
  CHECK(b.fidelity3 == doctest::Approx(std::pow(0.95, 1.5)).epsilon(1e-4));
}

TEST_CASE("frozen drift leaves the drift-study overlaps at one") {
  ScenarioConfig c = default_config(ScenarioKind::drift_study);
  c.noise.drift_enabled = false;
  c.drift_study.shots = 0;
  const DriftStudyResult r = run_drift_study(c);
  CHECK(r.floquet.overlap == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.static_zx.overlap == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("static ZX control is a ZX rotation by the configured angle") {
  const FloquetConfig f = default_config(ScenarioKind::drift_study).floquet;
  const CMatrix u = static_zx_tier(f, {}).propagate(0.0, static_zx_duration(f, kPi / 4));
  const CMatrix zxi = PauliString("ZXI").matrix();
  CHECK(std::max(unitary_fidelity(u, expm(zxi, kPi / 4)), unitary_fidelity(u, expm(zxi, -kPi / 4))) > 0.98);
}

TEST_CASE("three-qubit correction drive with zero amplitude changes nothing") {
  const ThreeQubitSetup s = three_qubit_setup(default_config(ScenarioKind::zx1_1yz_gate));
  ThreeQubitParams p{0.4, 0.3, 0.5, -0.2, 0.0, 1.1};
  const CMatrix a = three_qubit_gate(s, p);
  p.central_phase = -2.0;
  CHECK(max_abs_diff(a, three_qubit_gate(s, p)) < 1e-12);
  CHECK(zx1_1yz_dominant_labels().size() == 3);
  const ProcessMatrix ideal = chi_from_unitary(zx1_1yz_target());
  CHECK(max_nondominant_chi(ideal) < 1e-12);
}

TEST_CASE("populations csv round trips") {
  FloquetPopulations p{{0.0, 1e-8, 2e-8}, {1.0, 0.9, 1.0 / 3.0}, {0.0, 0.1, 0.2}};
  const std::string text = populations_csv(p);
  CHECK(text.rfind("time,P(+++),P(---)\n", 0) == 0);
  const FloquetPopulations q = parse_populations_csv(text);
  CHECK(q.time == p.time);
  CHECK(q.plus == p.plus);
  CHECK(q.minus == p.minus);
}

TEST_CASE("run directories compare byte for byte") {
  const RunDirectory a(scratch_dir("cmp_a")), b(scratch_dir("cmp_b"));
  CHECK(a.empty());
  a.write_text("x.txt", "same\n");
  b.write_text("x.txt", "same\n");
  a.write_json("sub/y.json", {{"v", 1}});
  b.write_json("sub/y.json", {{"v", 1}});
  CHECK(compare_runs(a.path(), b.path()).empty());
  b.write_text("x.txt", "diff\n");
  b.write_text("extra.txt", "\n");
  const auto diff = compare_runs(a.path(), b.path());
  CHECK(diff.size() == 2);
  CHECK_FALSE(a.empty());
}

TEST_CASE("a short optimization replays bit-identically") {
  ScenarioConfig c = parse_config(
      "scenario: zx-gate\nseed: 7\npulse: {calibration_budget: 6, prescan_points: 6}\n"
      "optimizer: {budget: 6}\ntomography: {shots: 200}\nnoise: {readout: {p: 0.02}}\n");
  const RunDirectory out(scratch_dir("replay_run"));
  const auto j = execute("optimize", c, {}, out);
  CHECK(j.at("scenario") == "zx-gate");
  CHECK(out.exists("trace_zx.jsonl"));
  CHECK(out.exists("chi.txt"));
  const std::string again = scratch_dir("replay_again");
  CHECK(replay(out.path(), again).empty());
  CHECK(category_of([&] { execute("optimize", c, {}, out); }) == ErrorCategory::io);
  CHECK(category_of([&] { execute("frobnicate", c, {}, RunDirectory(scratch_dir("bad_cmd"))); }) ==
        ErrorCategory::invalid_argument);
  fs::remove_all(out.path());
  fs::remove_all(again);
}

TEST_CASE("tomography at explicit parameters matches the gate model") {
  ScenarioConfig c = default_config(ScenarioKind::zx_gate);
  c.tomography.shots = 0;
  c.pulse.calibration_budget = 6;
  const RunDirectory out(scratch_dir("tomo"));
  const auto j = execute("tomography", c, {0.47, 0.0, 1.9}, out);
  CHECK(j.at("fidelity").get<double>() == doctest::Approx(j.at("exact_fidelity").get<double>()).epsilon(1e-9));
  CHECK(category_of([&] { execute("tomography", c, {0.5}, RunDirectory(scratch_dir("tomo_bad"))); }) ==
        ErrorCategory::invalid_argument);
  fs::remove_all(out.path());
}
