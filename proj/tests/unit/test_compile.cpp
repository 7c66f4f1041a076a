#include "oracles.hpp"

#include "qvbench/compile.hpp"
#include "qvbench/error.hpp"
#include "qvbench/qasm.hpp"
#include "qvbench/qvgen.hpp"
#include "qvbench/route.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

using namespace qvb;

namespace {

DeviceProfile profile_on(CouplingGraph g, GatesetFamily f) {
  DeviceProfile p;
  p.name = "test";
  p.graph = std::move(g);
  p.gateset_family = f;
  return p;
}

CompiledCircuit compile(const Circuit& c, const DeviceProfile& p, std::optional<std::vector<int>> subset = {},
                        std::uint64_t seed = 0, bool spill = false) {
  CompileRequest r;
  r.circuit = c;
  r.profile = p;
  r.qubit_subset = std::move(subset);
  r.seed = seed;
  r.allow_spill = spill;
  return compile_to_device(r);
}

}  // namespace

TEST_CASE("block extraction preserves the unitary", "[compile]") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const int m = 2 + static_cast<int>(i % 3);
    const auto c = generate_qv_circuit(QvSpec::square(m, 20, 2), i);
    const auto blocked = extract_blocks(c);
    // Consecutive blocks on the same pair merge into one.
    CHECK(blocked.blocks.size() <= static_cast<std::size_t>(m * (m / 2)));
    Circuit rebuilt(m);
    const auto dim = Eigen::Index{1} << m;
    MatX u = MatX::Identity(dim, dim);
    for (const auto& b : blocked.blocks) u = oracle::embed(b.unitary, {b.a, b.b}, m) * u;
    for (int q = 0; q < m; ++q) u = oracle::embed(blocked.tail[static_cast<std::size_t>(q)], {q}, m) * u;
    CHECK(phase_distance(u, unitary_of(c)) < 1e-10);
  }
  Circuit mixed(3);
  mixed.append(GateKind::H, {2}).append(GateKind::CX, {0, 1}).append(GateKind::RZ, {1}, {0.3});
  mixed.append(GateKind::CZ, {1, 0}).append(GateKind::CX, {1, 2}).append(GateKind::X, {0});
  mixed.append(GateKind::DELAY, {2}, {5});
  const auto blocked = extract_blocks(mixed);
  REQUIRE(blocked.blocks.size() == 2);
  MatX u = oracle::embed(blocked.blocks[0].unitary, {blocked.blocks[0].a, blocked.blocks[0].b}, 3);
  u = oracle::embed(blocked.blocks[1].unitary, {blocked.blocks[1].a, blocked.blocks[1].b}, 3) * u;
  for (int q = 0; q < 3; ++q) u = oracle::embed(blocked.tail[static_cast<std::size_t>(q)], {q}, 3) * u;
  CHECK(phase_distance(u, unitary_of(mixed)) < 1e-12);
}

TEST_CASE("routing on complete and line graphs", "[compile]") {
  const auto c = generate_qv_circuit(QvSpec::square(4, 1, 3), 0);
  CHECK(route(c, CouplingGraph::all_to_all(4), {0, 1, 2, 3}).swap_count == 0);

  Circuit far(3);
  far.append(GateKind::CX, {0, 2});
  const auto line = CouplingGraph::line(3);
  const auto routed = route(far, line, {0, 1, 2});
  CHECK(routed.swap_count >= 1);
  for (const auto& op : routed.circuit.ops())
    if (op.qubits.size() == 2) CHECK(line.has_edge(op.qubits[0], op.qubits[1]));

  CHECK_THROWS_AS(route(far, line, {0, 0, 1}), LayoutError);
  CHECK_THROWS_AS(route(far, CouplingGraph(3, {{0, 1}}), {0, 1, 2}), LayoutError);
}

TEST_CASE("routed circuits are equivalent after undoing the permutation", "[compile]") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const int m = 2 + static_cast<int>(i % 3);
    const auto c = generate_qv_circuit(QvSpec::square(m, 100, 12), i);
    const auto g = (i % 2 == 0 && m == 4) ? CouplingGraph(4, {{0, 1}, {1, 2}, {1, 3}}) : CouplingGraph::line(m);
    std::vector<int> layout(static_cast<std::size_t>(m));
    std::iota(layout.begin(), layout.end(), 0);
    const auto r = route(c, g, layout);
    CompiledCircuit as_compiled;
    as_compiled.circuit = r.circuit;
    as_compiled.initial_layout = r.initial_layout;
    as_compiled.final_layout = r.final_layout;
    CHECK(oracle::compiled_distance(c, as_compiled) < 1e-9);
  }
}

TEST_CASE("compile onto a subset of the T graph", "[compile]") {
  const auto lima = builtin_profile("lima-like");
  const auto c = generate_qv_circuit(QvSpec::square(3, 1, 1), 0);
  for (const auto& subset : connected_subsets(lima.graph, 3)) {
    const auto out = compile(c, lima, subset, 4);
    CHECK(legality_issues(out, lima).empty());
    CHECK(out.physical_qubits == subset);
    CHECK(oracle::compiled_distance(c, out) < 1e-9);
    CHECK(out.census.two_qubit_count >= 9);
    CHECK(out.census == gate_census(out.circuit));
  }
  const auto again = compile(c, lima, std::vector<int>{1, 3, 4}, 4);
  CHECK(serialize(again.circuit) == serialize(compile(c, lima, std::vector<int>{1, 3, 4}, 4).circuit));
  CHECK_THROWS_AS(compile(c, lima, std::vector<int>{0, 2, 4}), LayoutError);
  CHECK_THROWS_AS(compile(c, lima, std::vector<int>{0, 1}), LayoutError);
  CHECK_THROWS_AS(compile(generate_qv_circuit(QvSpec::square(6, 1, 1), 0), lima), CapacityError);
}

TEST_CASE("all-to-all compiles use exactly three entanglers per block", "[compile]") {
  const auto h12 = builtin_profile("h1-2-like");
  for (int m = 2; m <= 5; ++m) {
    const auto c = generate_qv_circuit(QvSpec::square(m, 1, 9), 0);
    const auto out = compile(c, h12);
    CHECK(out.swap_count == 0);
    CHECK(out.census.two_qubit_count == 3 * extract_blocks(c).blocks.size());
    CHECK(legality_issues(out, h12).empty());
  }
}

TEST_CASE("every family compiles legally and equivalently", "[compile]") {
  for (auto fam : all_gateset_families()) {
    for (int topo = 0; topo < 2; ++topo) {
      for (std::uint64_t i = 0; i < 6; ++i) {
        const int m = 2 + static_cast<int>(i % 3);
        const auto c = generate_qv_circuit(QvSpec::square(m, 6, 40), i);
        const auto p = profile_on(topo ? CouplingGraph::line(m) : CouplingGraph::all_to_all(m), fam);
        const auto out = compile(c, p, std::nullopt, i);
        INFO(family_name(fam) << " topo " << topo << " index " << i);
        CHECK(legality_issues(out, p).empty());
        CHECK(oracle::compiled_distance(c, out) < 1e-9);
      }
    }
  }
}

TEST_CASE("spill routes through neighbouring qubits", "[compile]") {
  const auto lima = builtin_profile("lima-like");
  const auto c = generate_qv_circuit(QvSpec::square(3, 1, 6), 0);
  const std::vector<int> scattered{0, 2, 4};
  const auto out = compile(c, lima, scattered, 1, true);
  CHECK(out.physical_qubits.size() > 3);
  CHECK(std::equal(scattered.begin(), scattered.end(), out.physical_qubits.begin()));
  CHECK(legality_issues(out, lima).empty());
  CHECK(oracle::compiled_distance(c, out) < 1e-9);
}

TEST_CASE("counts are reported in logical order", "[compile]") {
  CompiledCircuit cc;
  cc.final_layout = {2, 0};  // logical 0 on slot 2, logical 1 on slot 0
  Counts device;
  device.width = 3;
  device.shots = 10;
  device.by_index[from_bitstring("001")] = 7;  // slot 2 set
  device.by_index[from_bitstring("100")] = 3;  // slot 0 set
  const auto logical = remap_counts(device, cc);
  CHECK(logical.width == 2);
  CHECK(logical.by_bitstring() == std::map<std::string, std::uint64_t>{{"01", 3}, {"10", 7}});
}

TEST_CASE("layout retries keep the best attempt", "[compile]") {
  const auto g = builtin_profile("guadalupe-like");
  const auto c = generate_qv_circuit(QvSpec::square(5, 1, 13), 0);
  const auto subset = *first_connected_subset(g.graph, 5);
  const auto out = compile(c, g, subset, 77);
  CHECK(out.attempts >= 1);
  CHECK(out.attempts <= 17);
  if (out.attempts > 1) {
    const auto first_only = [&] {
      CompileRequest r;
      r.circuit = c;
      r.profile = g;
      r.qubit_subset = subset;
      r.max_retries = 0;
      return compile_to_device(r);
    }();
    CHECK(out.swap_count <= first_only.swap_count);
  }
  CHECK(legality_issues(out, g).empty());
}

TEST_CASE("untouched measured qubits receive an identity", "[compile]") {
  Circuit c(3);
  c.append(GateKind::CX, {0, 1}).measure_all();
  const auto p = profile_on(CouplingGraph::all_to_all(3), GatesetFamily::SuperconductingHeavyHex);
  const auto out = compile(c, p);
  const int slot = out.final_layout[2];
  std::size_t ids = 0;
  for (const auto& op : out.circuit.ops())
    if (op.gate == GateKind::ID && op.qubits[0] == slot) ++ids;
  CHECK(ids == 1);
  CHECK(legality_issues(out, p).empty());
}
