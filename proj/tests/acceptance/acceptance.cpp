// SPDX-License-Identifier: Apache-2.0
// Acceptance gate: runs every criterion at its stated tolerance and prints one PASS/FAIL line each.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <boost/math/tools/roots.hpp>
#include <json.hpp>

#include "vqgo/core/errors.hpp"
#include "vqgo/core/linalg.hpp"
#include "vqgo/core/pauli.hpp"
#include "vqgo/core/rng.hpp"
#include "vqgo/noise/readout_calibration.hpp"
#include "vqgo/scenarios/artifacts.hpp"
#include "vqgo/scenarios/config.hpp"
#include "vqgo/scenarios/runner.hpp"
#include "vqgo/tomography/chi_io.hpp"
#include "vqgo/tomography/oracle.hpp"
#include "vqgo/tomography/process_matrix.hpp"
#include "vqgo/tomography/process_tomography.hpp"
#include "vqgo/tomography/reduced.hpp"
#include "vqgo/tomography/zero_fidelity.hpp"

#ifndef VQGO_CONFIG_DIR
#define VQGO_CONFIG_DIR "configs"
#endif

using namespace vqgo;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 1;

std::string num(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string details;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!details.empty()) details += "; ";
    details += what + (ok ? "" : " [fail]");
  }
  void note(const std::string& what) {
    if (!details.empty()) details += "; ";
    details += what;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<Outcome(const fs::path&)> run;
};

ScenarioConfig config_file(const std::string& name) { return load_config(std::string(VQGO_CONFIG_DIR) + "/" + name); }

json run_scenario(const fs::path& dir, const std::string& command, const ScenarioConfig& c) {
  return execute(command, c, {}, RunDirectory(dir.string()));
}

CMatrix zx_quarter() { return expm(PauliString("ZX").matrix(), kPi / 4); }

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += x[k] / n;
    my += y[k] / n;
  }
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += (x[k] - mx) * (y[k] - my);
    sxx += (x[k] - mx) * (x[k] - mx);
    syy += (y[k] - my) * (y[k] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// Direct computations: result.json is a pure function of params.json.

json compute_round_trip(const json& params) {
  auto rng = make_rng(params.at("seed").get<std::uint64_t>(), {1});
  json diffs = json::array();
  for (int k = 0; k < params.at("unitaries").get<int>(); ++k) {
    const CMatrix u = random_unitary(4, rng);
    diffs.push_back(chi_max_diff(process_tomography(unitary_oracle(u), 2, kExactShots), chi_from_unitary(u)));
  }
  return {{"max_diff", diffs}};
}

json compute_reduced_scatter(const json& params) {
  const auto seed = params.at("seed").get<std::uint64_t>();
  const int shots = params.at("shots").get<int>();
  const ReadoutModel readout = calibrate_readout_to_baseline(params.at("baseline").get<double>(), 2);
  const CMatrix target = zx_quarter();
  const ReducedChi target_r = reduced_chi_from_unitary(target);
  const ProcessMatrix target_chi = chi_from_unitary(target);
  const auto& span = reduced_span();
  json rows = json::array();
  for (int k = 0; k < params.at("channels").get<int>(); ++k) {
    auto rng = make_rng(seed, {2, static_cast<std::uint64_t>(k)});
    std::uniform_real_distribution<double> side(-0.4, 0.4), angle(kPi / 4 - 0.6, kPi / 4 + 0.6), mix(0.0, 0.3);
    std::exponential_distribution<double> expo(1.0);
    const double a = side(rng), b = side(rng), c = angle(rng), q = mix(rng);
    std::array<double, 4> w{};
    double wsum = 0.0;
    for (auto& x : w) wsum += (x = expo(rng));
    const CMatrix u = expm(PauliString("ZI").matrix() * a + PauliString("IX").matrix() * b +
                               PauliString("ZX").matrix() * c,
                           1.0);
    const ChannelMap gamma = [=, &span](const CMatrix& rho) -> CMatrix {
      const CMatrix out = u * rho * u.adjoint();
      CMatrix mixed = CMatrix::Zero(4, 4);
      for (std::size_t j = 0; j < 4; ++j) {
        const CMatrix p = span[j].matrix();
        mixed += (w[j] / wsum) * p * out * p;
      }
      return (1.0 - q) * out + q * mixed;
    };
    const double exact = process_fidelity(chi_from_channel(gamma, 2), target_chi);
    const double reduced = reduced_overlap(reduced_process_tomography(MapOracle(2, gamma), kExactShots), target_r);
    const MapOracle noisy(2, gamma, readout, derive_seed(seed, {2, static_cast<std::uint64_t>(k), 1}));
    const double reduced_noisy = reduced_overlap(reduced_process_tomography(noisy, shots), target_r);
    const double full_noisy = process_fidelity(process_tomography(noisy, 2, shots), target_chi);
    rows.push_back({{"a", a}, {"b", b}, {"c", c}, {"q", q}, {"process_fidelity", exact},
                    {"reduced", reduced}, {"reduced_noisy", reduced_noisy}, {"full_noisy", full_noisy}});
  }
  return {{"channels", rows}};
}

json compute_zero_fidelity(const json& params) {
  const auto seed = params.at("seed").get<std::uint64_t>();
  const int reps = params.at("replications").get<int>();
  const int l = params.at("l").get<int>();
  const int shots = params.at("shots").get<int>();
  const CMatrix target = zx_quarter();
  const auto channel = [&](double delta) -> ChannelMap {
    const CMatrix u = expm(PauliString("ZX").matrix(), kPi / 4 - delta);
    return [u](const CMatrix& rho) -> CMatrix { return u * rho * u.adjoint(); };
  };
  const auto exact_at = [&](double delta) { return zero_fidelity_exact(target, channel(delta)); };
  json out = json::array();
  for (double level : params.at("levels").get<std::vector<double>>()) {
    boost::math::tools::eps_tolerance<double> tol(50);
    const auto bracket =
        boost::math::tools::bisect([&](double d) { return exact_at(d) - level; }, 0.0, kPi / 2, tol);
    const double delta = 0.5 * (bracket.first + bracket.second);
    const ChannelMap gamma = channel(delta);
    double mean = 0.0, m2 = 0.0;
    for (int r = 0; r < reps; ++r) {
      const auto rr = static_cast<std::uint64_t>(r);
      const ZeroFidelityPlan plan = make_zero_fidelity_plan(target, l, derive_seed(seed, {3, rr}));
      const double x = zero_fidelity_estimate(plan, MapOracle(2, gamma, {}, derive_seed(seed, {4, rr})), shots).value;
      mean += x / reps;
      m2 += x * x;
    }
    const double var = (m2 - reps * mean * mean) / (reps - 1);
    out.push_back({{"level", level}, {"delta", delta}, {"exact", exact_at(delta)}, {"mean", mean},
                   {"variance", var}, {"std_error", std::sqrt(var / reps)}});
  }
  return {{"levels", out}};
}

using Compute = std::function<json(const json&)>;

const std::map<std::string, Compute>& computations() {
  static const std::map<std::string, Compute> m{{"round_trip", compute_round_trip},
                                                {"reduced_scatter", compute_reduced_scatter},
                                                {"zero_fidelity", compute_zero_fidelity}};
  return m;
}

json run_computation(const fs::path& dir, const json& params) {
  const RunDirectory out(dir.string());
  out.write_json("params.json", params);
  const json result = computations().at(params.at("computation").get<std::string>())(params);
  out.write_json("result.json", result);
  return result;
}

Outcome ac1(const fs::path& dir) {
  const json r = run_computation(dir, {{"computation", "round_trip"}, {"seed", kSeed}, {"unitaries", 50}});
  double worst = 0.0;
  for (double d : r.at("max_diff")) worst = std::max(worst, d);
  Outcome o;
  o.check(r.at("max_diff").size() == 50 && worst <= 1e-8, "50 unitaries, max |chi diff| " + num(worst, 3));
  return o;
}

Outcome ac2(const fs::path& dir) {
  const json r = run_computation(
      dir, {{"computation", "reduced_scatter"}, {"seed", kSeed}, {"channels", 100}, {"shots", 10000}, {"baseline", 0.95}});
  std::vector<double> exact, noisy, full;
  double noiseless_gap = 0.0, mad = 0.0, exact_mad = 0.0;
  for (const auto& row : r.at("channels")) {
    exact.push_back(row.at("process_fidelity"));
    noisy.push_back(row.at("reduced_noisy"));
    full.push_back(row.at("full_noisy"));
    noiseless_gap = std::max(noiseless_gap, std::abs(row.at("reduced").get<double>() - exact.back()));
    mad += std::abs(noisy.back() - full.back()) / 100.0;
    exact_mad += std::abs(noisy.back() - exact.back()) / 100.0;
  }
  const auto [lo, hi] = std::minmax_element(full.begin(), full.end());
  Outcome o;
  o.check(noiseless_gap <= 1e-6, "noiseless max gap " + num(noiseless_gap, 3));
  const double rho = pearson(full, noisy);
  o.check(rho >= 0.95, "noisy reduced vs full tomography Pearson " + num(rho));
  o.check(mad <= 0.03, "MAD " + num(mad, 3));
  o.note("full tomography fidelity range [" + num(*lo, 3) + ", " + num(*hi, 3) + "], reduced vs noiseless Pearson " +
         num(pearson(exact, noisy)) + " MAD " + num(exact_mad, 3));
  return o;
}

Outcome ac3(const fs::path& dir) {
  const json r = run_computation(dir, {{"computation", "zero_fidelity"},
                                       {"seed", kSeed},
                                       {"replications", 1000},
                                       {"l", 200},
                                       {"shots", 1024},
                                       {"levels", {0.95, 0.5}}});
  Outcome o;
  std::vector<double> var;
  for (const auto& lv : r.at("levels")) {
    const double gap = std::abs(lv.at("mean").get<double>() - lv.at("exact").get<double>());
    const double se = lv.at("std_error");
    o.check(gap <= 3.0 * se, "F0 " + num(lv.at("exact"), 4) + ": |mean - exact| " + num(gap, 2) + " vs 3 SE " +
                                 num(3.0 * se, 2));
    var.push_back(lv.at("variance"));
  }
  o.check(var.at(0) < var.at(1), "variance " + num(var.at(0), 3) + " at 0.95 vs " + num(var.at(1), 3) + " at 0.5");
  return o;
}

int stage_evaluations(const json& run) {
  int n = 0;
  for (const auto& s : run.at("stages")) n += s.at("evaluations").get<int>();
  return n;
}

Outcome ac4(const fs::path& dir) {
  Outcome o;
  const json clean = run_scenario(dir / "noiseless", "optimize", config_file("zx_gate_noiseless.yaml"));
  const double f0 = clean.at("exact_fidelity");
  o.check(f0 >= 0.99 && stage_evaluations(clean) <= 200,
          "noiseless " + num(f0) + " in " + std::to_string(stage_evaluations(clean)) + " evaluations");

  const json noisy = run_scenario(dir / "noisy", "optimize", config_file("zx_gate.yaml"));
  const double f = noisy.at("fidelity");
  o.check(f >= 0.90 && f <= 0.96, "noisy " + num(f) + " in [0.90, 0.96]");

  const ProcessMatrix chi = read_chi_file((dir / "noisy" / "chi.txt").string());
  std::vector<std::pair<double, std::pair<int, int>>> entries;
  for (int m = 0; m < chi.chi.rows(); ++m)
    for (int n = 0; n < chi.chi.cols(); ++n) entries.push_back({std::abs(chi.chi(m, n)), {m, n}});
  std::partial_sort(entries.begin(), entries.begin() + 4, entries.end(),
                    [](const auto& a, const auto& b) { return a.first > b.first; });
  const std::set<int> dominant{PauliString("II").index(), PauliString("ZX").index()};
  bool placed = true, near_half = true;
  double top = 0.0, bottom = 1.0;
  for (int k = 0; k < 4; ++k) {
    const auto& [mag, at] = entries[static_cast<std::size_t>(k)];
    placed = placed && dominant.count(at.first) && dominant.count(at.second);
    near_half = near_half && std::abs(mag - 0.5 * f) <= 0.05;
    top = std::max(top, mag);
    bottom = std::min(bottom, mag);
  }
  o.check(placed, "four largest |chi| on {II, ZX}");
  o.check(top - bottom <= 0.05 && near_half,
          "magnitudes [" + num(bottom, 3) + ", " + num(top, 3) + "], spread " + num(top - bottom, 2));
  return o;
}

Outcome ac5(const fs::path& dir) {
  Outcome o;
  ScenarioConfig clean = config_file("zx1_1yz.yaml");
  clean.noise.readout.baseline.reset();
  clean.noise.readout.p = 0.0;
  clean.tomography.shots = 0;
  clean.tomography.zf_shots = 0;
  const json a = run_scenario(dir / "noiseless", "optimize", clean);
  o.check(a.at("exact_fidelity").get<double>() >= 0.98, "noiseless " + num(a.at("exact_fidelity")));

  const json b = run_scenario(dir / "noisy", "optimize", config_file("zx1_1yz.yaml"));
  const double f = b.at("fidelity");
  o.check(f >= 0.78 && f <= 0.88, "noisy " + num(f) + " in [0.78, 0.88]");
  const json& s = b.at("summary");
  const double nd = s.at("max_nondominant_chi"), floor = s.at("readout_floor");
  o.check(nd <= 0.04 + floor, "max non-dominant |chi| " + num(nd, 3) + " vs " + num(0.04 + floor, 3));
  o.note("noiseless gate " + num(b.at("exact_fidelity")) + ", audit " +
         (s.at("audit_ok").get<double>() > 0.5 ? "ok" : "violated") + ", blocks " +
         num(s.at("block_zx1_fidelity_corrected")) + " / " + num(s.at("block_1yz_fidelity_corrected")));
  return o;
}

Outcome ac6(const fs::path& dir) {
  Outcome o;
  const json r = run_scenario(dir / "identity", "identity-baseline", config_file("identity.yaml"));
  const double f2 = r.at("fidelity2"), f3 = r.at("fidelity3");
  o.check(std::abs(f2 - 0.95) <= 0.005, "2q " + num(f2));
  o.check(f3 >= 0.85 && f3 <= 0.93, "3q " + num(f3) + " in [0.85, 0.93]");
  return o;
}

std::size_t nearest(const std::vector<double>& t, double x) {
  const auto it = std::min_element(t.begin(), t.end(),
                                   [x](double a, double b) { return std::abs(a - x) < std::abs(b - x); });
  return static_cast<std::size_t>(it - t.begin());
}

Outcome ac7(const fs::path& dir) {
  Outcome o;
  const ScenarioConfig c = config_file("floquet.yaml");
  const json r = run_scenario(dir / "floquet", "optimize", c);
  const RunDirectory run((dir / "floquet").string());
  const FloquetPopulations table = parse_populations_csv(run.read_text("populations_table.csv"));
  const FloquetPopulations full = parse_populations_csv(run.read_text("populations_table_full.csv"));
  const double period = c.floquet.drive().period();
  const int periods = c.floquet.periods;

  const double oracle = std::pow(std::sin(6.0 * kPi / 25.0), 2);
  const double p3 = table.minus[nearest(table.time, periods * period)];
  o.check(std::abs(p3 - oracle) <= 0.05, "P(---)(3T) " + num(p3) + " vs " + num(oracle));

  double micromotion = 0.0;
  for (std::size_t k = 0; k < table.time.size(); ++k) {
    const double cycles = table.time[k] / period;
    if (std::abs(cycles - std::round(cycles)) < 1e-6) continue;
    const double effective = std::pow(std::sin(2.0 * kPi / 25.0 * cycles), 2);
    micromotion = std::max(micromotion, std::abs(table.minus[k] - effective));
  }
  o.check(micromotion > 0.02, "micromotion excursion " + num(micromotion, 3));

  double gap = 0.0;
  for (int k = 0; k <= periods; ++k) {
    const std::size_t i = nearest(table.time, k * period), j = nearest(full.time, k * period);
    gap = std::max({gap, std::abs(table.minus[i] - full.minus[j]), std::abs(table.plus[i] - full.plus[j])});
  }
  o.check(gap <= 0.05, "full tier stroboscopic gap " + num(gap, 3));
  o.note("full-tier max leakage " + num(r.at("summary").at("full_max_leakage"), 3));
  return o;
}

Outcome ac8(const fs::path& dir) {
  Outcome o;
  const json r = run_scenario(dir / "omega_c", "calibrate-omega-c", config_file("omega_c.yaml"));
  const json& cal = r.at("calibrations").at(0);
  for (const std::string tag : {"1", "3"}) {
    const double im = cal.at("residuals").at("imbalance" + tag);
    o.check(im <= 0.01, "side " + tag + " imbalance " + num(im, 3));
  }
  const double oc = cal.at("values").at("omega_c");
  o.check(std::abs(oc - 0.466) / 0.466 <= 0.2, "omega_c/2pi " + num(oc) + " MHz vs 0.466");
  return o;
}

Outcome ac9(const fs::path& dir) {
  Outcome o;
  const json d = run_scenario(dir / "drift_study", "drift-study", config_file("drift_study.yaml"));
  const json& s = d.at("summary");
  const double fo = s.at("floquet_overlap"), zo = s.at("static_zx_overlap");
  o.check(fo < 0.6, "Floquet overlap " + num(fo, 3));
  o.check(zo >= 0.95, "static ZX overlap " + num(zo, 3));
  o.note("coupling-only overlap " + num(s.at("floquet_coupling_only_overlap"), 3));

  ScenarioConfig still = config_file("floquet.yaml");
  still.floquet.full_tier = false;
  const json a = run_scenario(dir / "drift_free", "optimize", still);
  const double est = a.at("summary").at("recommended_estimate");
  o.check(est > 0.95, "drift-free F0 " + num(est) + " (exact " + num(a.at("exact_fidelity")) + ")");

  const json b = run_scenario(dir / "drift_enabled", "optimize", config_file("floquet_drift.yaml"));
  const double plateau = b.at("summary").at("last_quartile_mean");
  o.check(std::abs(plateau - 0.4) <= 0.15, "drift-enabled plateau " + num(plateau, 3) + " in [0.25, 0.55]");
  return o;
}

Outcome ac10(const fs::path& root) {
  Outcome o;
  int checked = 0;
  std::vector<std::string> mismatched;
  const fs::path replays = root / "ac10";
  for (int id = 1; id <= 9; ++id) {
    const fs::path base = root / ("ac" + std::to_string(id));
    if (!fs::exists(base)) continue;
    std::vector<fs::path> dirs{base};
    for (const auto& e : fs::directory_iterator(base))
      if (e.is_directory()) dirs.push_back(e.path());
    std::sort(dirs.begin(), dirs.end());
    for (const auto& dir : dirs) {
      const fs::path again = replays / fs::relative(dir, root);
      std::vector<std::string> diff;
      if (fs::exists(dir / "run.json")) {
        diff = replay(dir.string(), again.string());
      } else if (fs::exists(dir / "params.json")) {
        run_computation(again, RunDirectory(dir.string()).read_json("params.json"));
        diff = compare_runs(dir.string(), again.string());
      } else {
        continue;
      }
      ++checked;
      if (!diff.empty()) mismatched.push_back(fs::relative(dir, root).string() + " (" + diff.front() + ")");
    }
  }
  o.check(checked > 0, std::to_string(checked) + " runs replayed");
  std::string list;
  for (const auto& m : mismatched) list += (list.empty() ? "" : ", ") + m;
  o.check(mismatched.empty(), mismatched.empty() ? "all bit-identical" : "mismatch: " + list);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vqgo acceptance gate"};
  std::string out;
  std::vector<int> only;
  app.add_option("--out", out, "Directory for criterion run artifacts")->required();
  app.add_option("--only", only, "Criteria to run (default: all)")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "chi round trip", 60, ac1},
      {2, "reduced chi fidelity scatter", 300, ac2},
      {3, "zero-fidelity estimator", 300, ac3},
      {4, "ZX VQGO", 900, ac4},
      {5, "three-qubit VQGO", 1800, ac5},
      {6, "identity baselines", 300, ac6},
      {7, "Floquet populations", 1200, ac7},
      {8, "omega_c calibration", 600, ac8},
      {9, "drift study", 1800, ac9},
      {10, "determinism", 0, ac10},
  };

  const fs::path root(out);
  fs::create_directories(root);
  json summary = json::array();
  bool all = true;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const fs::path dir = root / ("ac" + std::to_string(c.id));
    fs::remove_all(dir);
    const auto start = std::chrono::steady_clock::now();
    Outcome res;
    try {
      res = c.run(c.id == 10 ? root : dir);
    } catch (const std::exception& e) {
      res.check(false, std::string("error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = num(secs, 3) + " s";
    if (c.limit_s > 0) {
      timing += " / " + num(c.limit_s, 4) + " s";
      if (secs > c.limit_s) res.check(false, "runtime over limit");
    }
    all = all && res.pass;
    std::cout << "AC" << c.id << ' ' << (res.pass ? "PASS" : "FAIL") << ' ' << c.title << ": " << res.details << " ["
              << timing << "]" << std::endl;
    summary.push_back({{"criterion", c.id}, {"title", c.title}, {"pass", res.pass}, {"details", res.details},
                       {"seconds", secs}, {"limit_seconds", c.limit_s}});
  }
  RunDirectory(root.string()).write_json("summary.json", summary);
  return all ? 0 : 1;
}
