#include "commands.hpp"

#include "qvbench/results_io.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qvb;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qvbench");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("qvbench_cli_" + name);
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

std::string write_profile(const fs::path& dir, double f2, double f1 = 1.0, double spam = 1.0) {
  DeviceProfile p;
  p.name = "flat";
  p.graph = CouplingGraph::all_to_all(4);
  p.gateset_family = GatesetFamily::IonAllPairsZz;
  p.noise = {f2, f1, spam};
  const auto path = (dir / "flat.json").string();
  save_profile(path, p);
  return path;
}

}  // namespace

TEST_CASE("generate writes reproducible suites", "[cli]") {
  const auto a = scratch("gen_a"), b = scratch("gen_b");
  CHECK(invoke({"generate", "-m", "3", "-n", "4", "-s", "9", "-o", a.string()}).code == 0);
  CHECK(invoke({"generate", "-m", "3", "-n", "4", "-s", "9", "-o", b.string(), "-j", "3"}).code == 0);
  CHECK(slurp(a / "manifest.json") == slurp(b / "manifest.json"));
  CHECK(slurp(a / "qv_m3_d3_0002.qasm") == slurp(b / "qv_m3_d3_0002.qasm"));
  CHECK(invoke({"generate", "-m", "3", "-n", "0", "-o", a.string()}).code == 2);
  CHECK(invoke({"generate", "-m", "1", "-o", a.string()}).code == 2);
}

TEST_CASE("enumerate connected subsets", "[cli]") {
  const auto r = invoke({"enumerate", "-p", "lima-like", "-n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# 4 connected subsets of size 3 on lima-like") != std::string::npos);
  CHECK(invoke({"enumerate", "-p", "lima-like", "-n", "6"}).code == 2);
  CHECK(invoke({"enumerate", "-p", "no-such-device", "-n", "2"}).code == 2);
  const auto j = invoke({"enumerate", "-p", "lima-like", "-n", "2", "--json"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["subsets"].size() == 4);
}

TEST_CASE("compile a circuit file", "[cli]") {
  const auto dir = scratch("compile");
  REQUIRE(invoke({"generate", "-m", "3", "-n", "1", "-o", dir.string()}).code == 0);
  const auto out = (dir / "compiled.qasm").string();
  CHECK(invoke({"compile", "-p", "lima-like", "-i", (dir / "qv_m3_d3_0000.qasm").string(), "-o", out}).code == 0);
  CHECK(fs::exists(out));
  CHECK(fs::exists(out + ".layout.json"));
  CHECK(invoke({"compile", "-p", "lima-like", "-i", (dir / "qv_m3_d3_0000.qasm").string(), "-o", out, "--subset", "0,2,4"})
            .code == 2);
}

TEST_CASE("run exit codes and report outputs", "[cli]") {
  const auto dir = scratch("run");
  const auto good = write_profile(dir, 1.0);
  const auto r = invoke({"run", "-p", good, "-m", "3", "-o", (dir / "good").string(), "--save-counts"});
  CHECK(r.code == 0);
  const auto suite = dir / "good" / "suite_m3_q0-1-2.json";
  REQUIRE(fs::exists(suite));
  CHECK(fs::exists(dir / "good" / "suite_m3_q0-1-2.csv"));
  CHECK(fs::is_directory(dir / "good" / "counts"));

  const auto bad_dir = scratch("run_bad");
  const auto bad = write_profile(bad_dir, 0.0, 0.0);
  CHECK(invoke({"run", "-p", bad, "-m", "3", "-o", (bad_dir / "out").string()}).code == 1);
  CHECK(invoke({"run", "-p", (dir / "absent.json").string(), "-m", "3", "-o", dir.string()}).code == 2);
  CHECK(invoke({"run", "-p", good, "-m", "3", "--shots", "0", "-o", dir.string()}).code == 2);

  const auto rep = dir / "report";
  const auto bad_suite = bad_dir / "out" / "suite_m3_q0-1-2.json";
  CHECK(invoke({"report", suite.string(), bad_suite.string(), "-o", rep.string()}).code == 0);
  const auto heat = slurp(rep / "heatmap.csv");
  CHECK(heat.find("flat,0,1,2") != std::string::npos);
  CHECK(slurp(rep / "summary.csv").find("flat,3,1,2,1/2") != std::string::npos);
  CHECK(fs::exists(rep / "report.json"));

  const auto q = invoke({"qv", suite.string()});
  CHECK(q.code == 0);
  CHECK(invoke({"qv", bad_suite.string()}).code == 1);
  CHECK(invoke({"qv", (dir / "nothing.json").string()}).code == 2);
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"run", "-p", "lima-like", "-m", "x:y"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"profiles"}).out.find("washington-like") != std::string::npos);
}
