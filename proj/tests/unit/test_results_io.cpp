#include "qvbench/error.hpp"
#include "qvbench/protocol.hpp"
#include "qvbench/qasm.hpp"
#include "qvbench/qvgen.hpp"
#include "qvbench/results_io.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qvb;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("qvbench_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("shortest round-trip doubles", "[results_io]") {
  for (double x : {0.1, 1.0 / 3.0, 2.0 / 3.0, 1e-300, 123456.789, 0.0}) CHECK(std::stod(format_double(x)) == x);
  CHECK(format_double(0.5) == "0.5");
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("suite results round-trip through JSON", "[results_io]") {
  ProtocolConfig cfg;
  cfg.max_circuits = 6;
  cfg.seed = 4;
  cfg.sigma = SigmaFormula::Binomial;
  const auto s = run_protocol(3, builtin_profile("lima-like"), std::nullopt, cfg);
  const auto back = suite_from_json(suite_to_json(s));
  CHECK(back.m == s.m);
  CHECK(back.subset == s.subset);
  CHECK(back.config.sigma == SigmaFormula::Binomial);
  CHECK(back.hops() == s.hops());
  REQUIRE(back.circuits.size() == s.circuits.size());
  for (std::size_t i = 0; i < s.circuits.size(); ++i) CHECK(back.circuits[i].counts == s.circuits[i].counts);
  REQUIRE(back.series.size() == s.series.size());
  CHECK(back.series.back().mean == s.series.back().mean);
  CHECK(back.stop_reason == s.stop_reason);
  CHECK(suite_to_json(back) == suite_to_json(s));

  const auto dir = scratch("suite");
  save_suite((dir / "suite").string(), s);
  CHECK(fs::exists(dir / "suite.csv"));
  CHECK(slurp(dir / "suite.csv").rfind("k,hop,ideal_hop,mean,mean_minus_2sigma,z_conf\n", 0) == 0);
  CHECK(load_suite((dir / "suite.json").string()).hops() == s.hops());

  auto j = suite_to_json(s);
  j["schema"] = 99;
  CHECK_THROWS_AS(suite_from_json(j), LoadError);
  CHECK_THROWS_AS(load_suite((dir / "missing.json").string()), IoError);
}

TEST_CASE("counts files", "[results_io]") {
  Counts c;
  c.width = 3;
  c.shots = 5;
  c.by_index = {{0, 2}, {5, 3}};
  const auto j = counts_to_json(c, 7);
  CHECK(j["counts"]["101"] == 3);
  CHECK(j["circuit_index"] == 7);
  const auto back = counts_from_json(j);
  CHECK(back.by_index == c.by_index);
  CHECK(back.width == 3);
}

TEST_CASE("circuit suites on disk", "[results_io]") {
  const auto spec = QvSpec::square(3, 5, 21);
  const auto dir = scratch("circuits");
  const auto manifest = write_suite(spec, dir.string());
  REQUIRE(manifest["circuits"].size() == 5);
  const auto first = manifest["circuits"][0];
  const auto text = slurp(dir / first["file"].get<std::string>());
  CHECK(first["fnv1a64"] == fnv1a_hex(text));
  CHECK(parse_circuit(text) == generate_qv_circuit(spec, 0));
  CHECK_THROWS_AS(write_text_file("/nonexistent-dir/x/y.txt", "z"), IoError);
}
