#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "vqgo/bayesopt/acquisition.hpp"
#include "vqgo/bayesopt/gp.hpp"
#include "vqgo/bayesopt/optimizer.hpp"
#include "vqgo/bayesopt/search_space.hpp"
#include "vqgo/bayesopt/trace.hpp"
#include "vqgo/core/errors.hpp"

using namespace vqgo;

namespace {

SearchSpace box2() { return SearchSpace({{"a", -1.0, 1.0, ""}, {"b", 0.0, 2.0, "MHz"}}); }

double bump(const RVector& x) { return 1.0 - std::pow(x(0) - 0.3, 2) - 0.5 * std::pow(x(1) - 1.2, 2); }

GpHyper hyper(int d, double length) {
  GpHyper h;
  h.length = RVector::Constant(d, length);
  return h;
}

}  // namespace

TEST_CASE("matern 5/2 closed form") {
  const GpHyper h = hyper(1, 0.5);
  RVector a(1), b(1);
  a << 0.1;
  b << 0.4;
  const double r = 0.3 / 0.5;
  const double ref = (1.0 + std::sqrt(5.0) * r + 5.0 * r * r / 3.0) * std::exp(-std::sqrt(5.0) * r);
  CHECK(matern52(a, b, h) == doctest::Approx(ref));
  CHECK(matern52(a, a, h) == doctest::Approx(1.0));
}

TEST_CASE("GP posterior matches a direct solve") {
  RMatrix x(3, 1);
  x << 0.1, 0.5, 0.8;
  RVector y(3), se(3);
  y << 0.2, 0.9, 0.4;
  se << 0.0, 0.05, 0.1;
  GpHyper h = hyper(1, 0.3);
  h.nugget = 1e-6;
  const GpSurrogate gp(x, y, se, h);

  const double m = gp.y_mean(), s = gp.y_scale();
  RMatrix k(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) k(i, j) = matern52(x.row(i).transpose(), x.row(j).transpose(), h);
  for (int i = 0; i < 3; ++i) k(i, i) += h.nugget + se(i) * se(i) / (s * s) + gp.jitter();
  RVector u(1);
  u << 0.6;
  RVector ks(3);
  for (int i = 0; i < 3; ++i) ks(i) = matern52(u, x.row(i).transpose(), h);
  const RVector ys = (y.array() - m) / s;
  const double mean = m + s * ks.dot(k.ldlt().solve(ys));
  const double var = s * s * (1.0 - ks.dot(k.ldlt().solve(ks)));
  const GpPrediction p = gp.predict(u);
  CHECK(p.mean == doctest::Approx(mean).epsilon(1e-9));
  CHECK(p.var == doctest::Approx(var).epsilon(1e-7));
}

TEST_CASE("noise-free GP interpolates") {
  RMatrix x(4, 2);
  x << 0.1, 0.2, 0.7, 0.3, 0.4, 0.9, 0.8, 0.8;
  RVector y(4);
  for (int i = 0; i < 4; ++i) y(i) = std::sin(3.0 * x(i, 0)) + x(i, 1);
  const GpSurrogate gp = GpSurrogate::fit(x, y, RVector::Zero(4));
  for (int i = 0; i < 4; ++i) {
    const GpPrediction p = gp.predict(x.row(i).transpose());
    CHECK(p.mean == doctest::Approx(y(i)).epsilon(1e-6));
    CHECK(p.var < 1e-6);
  }
}

TEST_CASE("expected improvement closed form") {
  RMatrix x(2, 1);
  x << 0.2, 0.7;
  RVector y(2);
  y << 0.3, 0.5;
  const GpSurrogate gp(x, y, RVector::Zero(2), hyper(1, 0.4));
  RVector u(1);
  u << 0.45;
  const GpPrediction p = gp.predict(u);
  const double sd = std::sqrt(p.var), best = 0.5;
  const double z = (p.mean - best) / sd;
  const double ref = (p.mean - best) * 0.5 * std::erfc(-z / std::sqrt(2.0)) + sd * std::exp(-0.5 * z * z) / std::sqrt(2.0 * kPi);
  CHECK(expected_improvement(gp, u, best) == doctest::Approx(ref).epsilon(1e-9));
  RVector at(1);
  at << 0.7;
  CHECK(expected_improvement(gp, at, best) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("search space maps to and from the unit box") {
  const SearchSpace s = box2();
  RVector x(2);
  x << 0.25, 1.5;
  const RVector u = s.to_unit(x);
  CHECK(u(0) == doctest::Approx(0.625));
  CHECK(u(1) == doctest::Approx(0.75));
  CHECK((s.from_unit(u) - x).norm() < 1e-15);
  CHECK(s.contains(x));
  x(1) = 2.5;
  CHECK_FALSE(s.contains(x));
  CHECK(s.index_of("b") == 1);
  CHECK_THROWS_AS(s.index_of("c"), Error);
  CHECK_THROWS_AS(SearchSpace({{"a", 1.0, 0.0, ""}}), Error);
}

TEST_CASE("scrambled Sobol points are seeded and balanced") {
  SobolSequence a(3, 5), b(3, 5), c(3, 6);
  RVector mean = RVector::Zero(3);
  bool differs = false;
  for (int k = 0; k < 256; ++k) {
    const RVector p = a.next();
    CHECK((p - b.next()).norm() == 0.0);
    differs = differs || (p - c.next()).norm() > 0.0;
    CHECK(p.minCoeff() >= 0.0);
    CHECK(p.maxCoeff() < 1.0);
    mean += p / 256.0;
  }
  CHECK(differs);
  CHECK((mean.array() - 0.5).abs().maxCoeff() < 0.01);
}

TEST_CASE("optimizer finds a smooth maximum and is deterministic") {
  OptimizerOptions o;
  o.budget = 24;
  o.seed = 4;
  o.first_tick = 10;
  const Objective f = [](const RVector& x, long) { return Evaluation{bump(x), 0.0, {}}; };
  const OptimizationTrace t = optimize(f, box2(), o);
  REQUIRE(t.records.size() == 24);
  CHECK(t.incumbent().value > 0.995);
  int design = 0;
  for (std::size_t k = 0; k < t.records.size(); ++k) {
    CHECK(t.records[k].tick == 10 + static_cast<long>(k));
    design += t.records[k].phase == "design";
  }
  CHECK(design == 6);
  const auto h = t.incumbent_history();
  for (std::size_t k = 1; k < h.size(); ++k) CHECK(h[k] >= h[k - 1]);

  const OptimizationTrace again = optimize(f, box2(), o);
  for (std::size_t k = 0; k < t.records.size(); ++k) {
    CHECK(again.records[k].x == t.records[k].x);
    CHECK(again.records[k].value == t.records[k].value);
  }
}

TEST_CASE("failed evaluations are recorded with a penalty") {
  OptimizerOptions o;
  o.budget = 12;
  o.seed = 1;
  const Objective f = [](const RVector& x, long) {
    if (x(0) > 0.5) fail(ErrorCategory::leakage, "too much leakage");
    return Evaluation{bump(x), 0.0, {}};
  };
  const OptimizationTrace t = optimize(f, box2(), o);
  double worst_so_far = 0.0;
  int failures = 0;
  for (const auto& r : t.records) {
    if (!r.failed) {
      worst_so_far = std::min(worst_so_far, r.value);
      continue;
    }
    ++failures;
    CHECK(r.value < worst_so_far);
    CHECK(r.error.find("leakage") != std::string::npos);
  }
  CHECK(failures > 0);
  CHECK_FALSE(t.incumbent().failed);
}

TEST_CASE("recommend discounts a lucky noisy draw") {
  const SearchSpace s({{"a", 0.0, 1.0, ""}});
  OptimizationTrace t;
  t.names = {"a"};
  for (int k = 0; k <= 10; ++k) {
    TraceRecord r;
    r.iteration = k;
    r.x = {0.1 * k};
    r.value = 1.0 - std::pow(0.1 * k - 0.4, 2);
    r.std_error = 0.02;
    t.records.push_back(r);
  }
  t.records[9].value = 1.05;
  t.records[9].std_error = 0.3;
  int inc = 0;
  for (int k = 0; k <= 10; ++k)
    if (t.records[static_cast<std::size_t>(k)].value > t.records[static_cast<std::size_t>(inc)].value) inc = k;
  for (auto& r : t.records) {
    r.incumbent = inc;
    r.incumbent_value = t.records[static_cast<std::size_t>(inc)].value;
  }
  CHECK(t.incumbent().iteration == 9);
  const TraceRecord& best = recommend(t, s);
  CHECK(std::abs(best.x[0] - 0.4) < 0.15);

  for (auto& r : t.records) r.std_error = 0.0;
  CHECK(recommend(t, s).iteration == 9);
}

TEST_CASE("trace lines and files round trip") {
  TraceRecord r;
  r.iteration = 3;
  r.phase = "bo";
  r.x = {0.1, 1.0 / 3.0};
  r.value = 0.123456789012345;
  r.std_error = 0.01;
  r.tick = 42;
  r.incumbent = 2;
  r.incumbent_value = 0.5;
  r.extra["fidelity"] = 0.987654321;
  std::vector<std::string> names;
  const TraceRecord back = parse_trace_line(trace_line(r, {"a", "b"}), &names);
  CHECK(names == std::vector<std::string>{"a", "b"});
  CHECK(back.x == r.x);
  CHECK(back.value == r.value);
  CHECK(back.tick == 42);
  CHECK(back.extra.at("fidelity") == r.extra.at("fidelity"));

  const auto path = (std::filesystem::temp_directory_path() / "vqgo_trace_test.jsonl").string();
  std::filesystem::remove(path);
  OptimizationTrace t;
  t.names = {"a", "b"};
  t.records = {r, r};
  t.records[1].iteration = 4;
  write_trace(path, t);
  const OptimizationTrace u = read_trace(path);
  CHECK(u.records.size() == 2);
  CHECK(u.records[1].iteration == 4);
  CHECK(u.names == t.names);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_trace(path), Error);
}
