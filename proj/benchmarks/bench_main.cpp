#include "qvbench/compile.hpp"
#include "qvbench/qvgen.hpp"
#include "qvbench/rng.hpp"
#include "qvbench/sim.hpp"
#include "qvbench/topology.hpp"
#include "qvbench/two_qubit.hpp"

#include <benchmark/benchmark.h>

using namespace qvb;

static void BM_IdealDistribution(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto c = generate_qv_circuit(QvSpec::square(m, 1, 1), 0);
  for (auto _ : state) benchmark::DoNotOptimize(ideal_distribution(c));
}
BENCHMARK(BM_IdealDistribution)->DenseRange(4, 12, 4);

static void BM_NoisySampling(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto c = generate_qv_circuit(QvSpec::square(m, 1, 1), 0);
  const NoiseModel noise{0.99, 0.9997, 0.99};
  std::uint64_t key = 0;
  for (auto _ : state) {
    RngStream rng(7, key++, StreamPurpose::Sampling);
    benchmark::DoNotOptimize(sample_counts(c, 100, noise, rng));
  }
}
BENCHMARK(BM_NoisySampling)->DenseRange(4, 8, 2);

static void BM_DecomposeSu4(benchmark::State& state) {
  RngStream rng(3, 0);
  const Mat4 u = sample_haar_su4(rng);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_su4(u, GateKind::CX));
}
BENCHMARK(BM_DecomposeSu4);

static void BM_CompileHeavyHex(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto profile = builtin_profile("montreal-like");
  CompileRequest req;
  req.circuit = generate_qv_circuit(QvSpec::square(m, 1, 1), 0);
  req.profile = profile;
  for (auto _ : state) benchmark::DoNotOptimize(compile_to_device(req));
}
BENCHMARK(BM_CompileHeavyHex)->DenseRange(3, 7, 2);

static void BM_SubsetCount(benchmark::State& state) {
  const auto g = builtin_profile("washington-like").graph;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subset_count(g, n));
}
BENCHMARK(BM_SubsetCount)->DenseRange(3, 6, 1);
BENCHMARK_MAIN();
