#include "qvbench/error.hpp"
#include "qvbench/protocol.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace qvb;

namespace {

DeviceProfile ideal_device(int n, NoiseModel noise = {}) {
  DeviceProfile p;
  p.name = "ideal";
  p.graph = CouplingGraph::all_to_all(n);
  p.gateset_family = GatesetFamily::IonAllPairsZz;
  p.noise = noise;
  return p;
}

Verdict v(bool passed) {
  Verdict out;
  out.passed = passed;
  return out;
}

SuiteResult stub(const std::string& ts, double hop, int m = 3, std::string name = "dev") {
  SuiteResult s;
  s.m = m;
  s.profile_name = std::move(name);
  s.subset = {0, 1, 2};
  s.timestamp = ts;
  for (int i = 0; i < 4; ++i) {
    CircuitResult r;
    r.hop = hop;
    s.circuits.push_back(r);
  }
  const auto hops = s.hops();
  s.series = cumulative_stats(hops);
  return s;
}

}  // namespace

TEST_CASE("noiseless devices pass and depolarized devices fail", "[protocol]") {
  ProtocolConfig cfg;
  cfg.max_circuits = 300;
  cfg.seed = 3;
  const auto good = run_protocol(4, ideal_device(4), std::nullopt, cfg);
  CHECK(good.verdict.passed);
  CHECK(good.stop_reason == "pass");
  CHECK(good.circuits.size() == 100);
  CHECK(good.subset == std::vector<int>{0, 1, 2, 3});

  const auto bad = run_protocol(3, ideal_device(3, {0.0, 0.0, 1.0}), std::nullopt, cfg);
  CHECK_FALSE(bad.verdict.passed);
  CHECK(bad.series.back().mean < 0.55);
  CHECK(bad.stop_reason == "hopeless");
}

TEST_CASE("single-circuit runs and argument checks", "[protocol]") {
  ProtocolConfig cfg;
  cfg.max_circuits = 1;
  const auto s = run_protocol(2, ideal_device(2), std::nullopt, cfg);
  REQUIRE(s.series.size() == 1);
  CHECK(s.series[0].k == 1);
  CHECK(s.stop_reason == "max_circuits");
  CHECK(s.circuits[0].counts.size() >= 1);

  cfg.shots = 0;
  CHECK_THROWS_AS(run_protocol(2, ideal_device(2), std::nullopt, cfg), UndefinedResultError);
  cfg.shots = 100;
  CHECK_THROWS_AS(run_protocol(5, ideal_device(3), std::nullopt, cfg), CapacityError);
  CHECK_THROWS_AS(run_protocol(3, builtin_profile("lima-like"), std::vector<int>{0, 2, 4}, cfg), LayoutError);
}

TEST_CASE("results do not depend on the worker count", "[protocol]") {
  ProtocolConfig cfg;
  cfg.max_circuits = 24;
  cfg.seed = 11;
  cfg.stop_on_pass = false;
  const auto lima = builtin_profile("lima-like");
  const auto a = run_protocol(3, lima, std::nullopt, cfg);
  cfg.workers = 4;
  const auto b = run_protocol(3, lima, std::nullopt, cfg);
  REQUIRE(a.circuits.size() == b.circuits.size());
  for (std::size_t i = 0; i < a.circuits.size(); ++i) {
    CHECK(a.circuits[i].counts == b.circuits[i].counts);
    CHECK(a.circuits[i].swap_count == b.circuits[i].swap_count);
  }
  CHECK(a.hops() == b.hops());
}

TEST_CASE("quantum volume from per-width verdicts", "[protocol]") {
  const auto qv = quantum_volume({{2, v(true)}, {3, v(true)}, {4, v(false)}});
  CHECK(qv.log2_qv == 3);
  CHECK(qv.value() == 8);
  CHECK(qv.warnings.empty());

  const auto none = quantum_volume({{2, v(false)}});
  CHECK(none.below_two());
  CHECK(none.label() == "<2");

  const auto gap = quantum_volume({{3, v(true)}, {4, v(true)}, {5, v(false)}, {6, v(true)}});
  CHECK(gap.log2_qv == 6);
  CHECK(gap.warnings.size() == 1);

  CHECK_THROWS_AS(quantum_volume({}), NoDataError);
}

TEST_CASE("drift series", "[protocol]") {
  const auto d = drift_series({stub("2026-02-01T00:00:00Z", 0.8), stub("2026-01-01T00:00:00Z", 0.7)});
  REQUIRE(d.size() == 2);
  CHECK(d[0].timestamp == "2026-01-01T00:00:00Z");
  CHECK(d[0].mean == Catch::Approx(0.7));
  CHECK(d[1].mean == Catch::Approx(0.8));
  CHECK(d[1].mean_minus_2sigma == Catch::Approx(0.8 - 2 * 0.8 * std::sqrt(0.2 / 4)));
  CHECK(d[0].k == 4);

  CHECK_THROWS_AS(drift_series({stub("a", 0.8)}), IncompatibleSeriesError);
  CHECK_THROWS_AS(drift_series({stub("a", 0.8), stub("b", 0.8, 4)}), IncompatibleSeriesError);
  CHECK_THROWS_AS(drift_series({stub("a", 0.8), stub("b", 0.8, 3, "other")}), IncompatibleSeriesError);
}
