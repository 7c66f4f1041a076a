#include "oracles.hpp"

#include "qvbench/error.hpp"
#include "qvbench/topology.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>

using namespace qvb;

namespace {

CouplingGraph t_graph() { return CouplingGraph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}); }

}  // namespace

TEST_CASE("graph construction", "[topology]") {
  CHECK_THROWS_AS(CouplingGraph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(CouplingGraph(3, {{0, 3}}), std::invalid_argument);
  const CouplingGraph g(4, {{2, 1}, {1, 2}, {0, 1}});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.is_connected());
  CHECK(CouplingGraph::ring(8).edges().size() == 8);
  CHECK(CouplingGraph::all_to_all(12).edges().size() == 66);
  const auto d = CouplingGraph::line(4).distances();
  CHECK(d[0][3] == 3);
  CHECK(g.distances()[0][3] == -1);
}

TEST_CASE("connected subsets on small fixtures", "[topology]") {
  CHECK(connected_subsets(CouplingGraph::line(5), 5).size() == 1);
  const auto t3 = connected_subsets(t_graph(), 3);
  CHECK(t3 == std::vector<std::vector<int>>{{0, 1, 2}, {0, 1, 3}, {1, 2, 3}, {1, 3, 4}});
  CHECK(subset_count(builtin_profile("guadalupe-like").graph, 4) == 24);
  CHECK(first_connected_subset(t_graph(), 3) == std::vector<int>{0, 1, 2});
  CHECK(connected_subsets(t_graph(), 6).empty());
}

TEST_CASE("enumeration agrees with the power-set oracle", "[topology]") {
  std::vector<CouplingGraph> graphs;
  for (const auto& name : builtin_profile_names()) {
    const auto p = builtin_profile(name);
    if (p.graph.n_qubits() <= 16) graphs.push_back(p.graph);
  }
  std::mt19937_64 eng(17);
  for (int i = 0; i < 30; ++i) {
    const int n = 4 + static_cast<int>(eng() % 11);
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (eng() % 100 < 25) e.emplace_back(a, b);
    graphs.emplace_back(n, e);
  }
  for (const auto& g : graphs) {
    for (int n = 1; n <= g.n_qubits(); ++n) {
      const auto subsets = connected_subsets(g, n);
      REQUIRE(subsets.size() == oracle::brute_force_subset_count(g, n));
      CHECK(subset_count(g, n) == subsets.size());
      CHECK(std::is_sorted(subsets.begin(), subsets.end()));
      for (const auto& s : subsets) CHECK(g.induces_connected(s));
    }
    CHECK(subset_count(g, 1) == static_cast<std::uint64_t>(g.n_qubits()));
    CHECK((subset_count(g, g.n_qubits()) == 1) == g.is_connected());
  }
}

TEST_CASE("builtin fixtures", "[topology]") {
  const auto h = builtin_profile("h1-2-like");
  CHECK(h.graph.n_qubits() == 12);
  CHECK(h.graph.edges().size() == 66);
  CHECK(h.noise.f2 == 0.995);
  const auto lucy = builtin_profile("lucy-like");
  CHECK(lucy.graph.n_qubits() == 8);
  CHECK(lucy.graph.edges().size() == 8);
  CHECK(lucy.gateset_family == GatesetFamily::RingEcr);
  const std::map<std::string, std::pair<int, std::size_t>> sizes = {
      {"lima-like", {5, 4}},         {"bogota-like", {5, 4}},      {"jakarta-like", {7, 6}},
      {"guadalupe-like", {16, 16}},  {"montreal-like", {27, 28}},  {"brooklyn-like", {65, 72}},
      {"washington-like", {127, 142}}, {"harmony-like", {11, 55}}, {"aspen-11-like", {38, 43}},
      {"aspen-m-1-like", {80, 102}},
  };
  for (const auto& [name, nq] : sizes) {
    const auto p = builtin_profile(name);
    CHECK(p.graph.n_qubits() == nq.first);
    CHECK(p.graph.edges().size() == nq.second);
    CHECK(p.graph.is_connected());
    CHECK_FALSE(p.provenance.empty());
  }
  CHECK_THROWS_AS(builtin_profile("nonesuch"), LoadError);
}

TEST_CASE("profile JSON round trip and validation", "[topology]") {
  const auto p = builtin_profile("lima-like");
  const auto back = profile_from_json(profile_to_json(p));
  CHECK(back.name == p.name);
  CHECK(back.graph.edges() == p.graph.edges());
  CHECK(back.noise.f_spam == p.noise.f_spam);
  CHECK(back.vendor_qv == p.vendor_qv);

  auto j = profile_to_json(p);
  j["f2"] = 1.5;
  j["gateset_family"] = "quantum-dots";
  j.erase("name");
  try {
    profile_from_json(j);
    FAIL("expected a load error");
  } catch (const LoadError& e) {
    CHECK(e.fields() == std::vector<std::string>{"name", "gateset_family", "f2"});
  }
  j = profile_to_json(p);
  j["schema"] = 2;
  CHECK_THROWS_AS(profile_from_json(j), LoadError);
  j = profile_to_json(p);
  j["edges"] = {{0, 9}};
  CHECK_THROWS_AS(profile_from_json(j), LoadError);

  const auto path = std::filesystem::temp_directory_path() / "qvbench_bad_profile.json";
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(load_profile(path.string()), LoadError);
  std::filesystem::remove(path);
}

TEST_CASE("shipped profile files match the builtins", "[topology]") {
  for (const auto& name : builtin_profile_names()) {
    const auto path = std::filesystem::path(QVBENCH_PROFILE_DIR) / (name + ".json");
    REQUIRE(std::filesystem::exists(path));
    std::ifstream in(path);
    nlohmann::json j;
    in >> j;
    CHECK(j == profile_to_json(builtin_profile(name)));
  }
}
