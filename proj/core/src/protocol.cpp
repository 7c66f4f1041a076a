#include "qvbench/protocol.hpp"

#include "qvbench/compile.hpp"
#include "qvbench/error.hpp"
#include "qvbench/parallel.hpp"
#include "qvbench/qvgen.hpp"
#include "qvbench/rng.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>

namespace qvb {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CircuitResult run_one(int m, const DeviceProfile& profile, const std::vector<int>& subset,
                      const ProtocolConfig& cfg, std::uint64_t index) {
  CircuitResult r;
  r.circuit_index = index;
  r.shots = cfg.shots;
  const auto spec = QvSpec::square(m, cfg.max_circuits, cfg.seed);
  const Circuit logical = generate_qv_circuit(spec, index);
  const auto dist = ideal_distribution(logical);
  const auto hs = heavy_set(dist);
  r.ideal_hop = ideal_hop(dist, hs);

  CompiledCircuit compiled;
  try {
    CompileRequest req;
    req.circuit = logical;
    req.profile = profile;
    req.qubit_subset = subset;
    req.allow_spill = cfg.allow_spill;
    req.seed = mix(cfg.seed ^ mix(index));
    req.max_retries = cfg.max_retries;
    compiled = compile_to_device(req);
  } catch (const Error& e) {
    r.compiled = false;
    r.error = e.what();
    return r;
  }
  r.swap_count = compiled.swap_count;
  r.two_qubit_count = compiled.census.two_qubit_count;
  r.final_layout = compiled.final_layout;

  RngStream rng(cfg.seed, index, StreamPurpose::Sampling);
  const Counts counts = remap_counts(sample_counts(compiled.circuit, cfg.shots, profile.noise, rng), compiled);
  r.counts = counts.by_index;
  for (const auto& [x, n] : counts.by_index)
    if (hs.contains(x)) r.heavy_count += n;
  r.hop = cfg.shots == 0 ? 0.0 : static_cast<double>(r.heavy_count) / static_cast<double>(cfg.shots);
  return r;
}

}  // namespace

std::vector<double> SuiteResult::hops() const {
  std::vector<double> h;
  for (const auto& c : circuits)
    if (c.compiled) h.push_back(c.hop);
  return h;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

SuiteResult run_protocol(int m, const DeviceProfile& profile, std::optional<std::vector<int>> subset,
                         const ProtocolConfig& config) {
  if (config.max_circuits < 1) throw std::invalid_argument("max_circuits must be at least 1");
  if (config.shots < 1) throw UndefinedResultError("HOP undefined for zero shots");
  profile.noise.validate();
  QvSpec::square(m, config.max_circuits, config.seed).validate();

  SuiteResult suite;
  suite.m = m;
  suite.profile_name = profile.name;
  suite.config = config;
  suite.timestamp = utc_timestamp();
  if (subset) {
    suite.subset = *subset;
  } else {
    auto first = first_connected_subset(profile.graph, m);
    if (!first) throw CapacityError("device has no connected subset of size " + std::to_string(m));
    suite.subset = *first;
  }
  {
    // Surface an unusable subset here rather than as a failure per circuit.
    CompileRequest probe;
    probe.circuit = Circuit(m);
    probe.profile = profile;
    probe.qubit_subset = suite.subset;
    probe.allow_spill = config.allow_spill;
    probe.max_retries = 0;
    compile_to_device(probe);
  }

  const auto total = static_cast<std::size_t>(config.max_circuits);
  const std::size_t batch = std::max<std::size_t>(1, std::size_t{4} * std::max(1U, config.workers));
  std::vector<double> hops;
  std::size_t failures = 0;
  double sum = 0;
  suite.stop_reason = "max_circuits";

  for (std::size_t start = 0; start < total; start += batch) {
    const std::size_t n = std::min(batch, total - start);
    std::vector<CircuitResult> results(n);
    parallel_for(n, config.workers, [&](std::size_t i) {
      results[i] = run_one(m, profile, suite.subset, config, start + i);
    });
    // Stopping is decided in index order so the outcome ignores scheduling.
    bool stop = false;
    for (auto& r : results) {
      r.timestamp = suite.timestamp;
      const bool ok = r.compiled;
      if (ok) {
        hops.push_back(r.hop);
        sum += r.hop;
      } else {
        ++failures;
      }
      suite.circuits.push_back(std::move(r));
      const std::size_t processed = suite.circuits.size();
      if (failures * 10 > std::max<std::size_t>(processed, 10)) {
        suite.aborted = true;
        suite.stop_reason = "compile_abort";
        stop = true;
        break;
      }
      if (!ok || hops.size() < static_cast<std::size_t>(std::max(config.min_circuits, 1))) continue;
      const auto p = stats_at(sum / static_cast<double>(hops.size()), hops.size(), config.sigma);
      if (config.stop_on_pass && verdict_of(p, config.early_stop_conf).passed) {
        suite.stop_reason = "pass";
        stop = true;
        break;
      }
      if (config.stop_on_hopeless && p.mean + 2.0 * p.sigma < kHopThreshold) {
        suite.stop_reason = "hopeless";
        stop = true;
        break;
      }
    }
    if (stop) break;
  }
  if (!suite.aborted && failures * 10 > suite.circuits.size()) {
    suite.aborted = true;
    suite.stop_reason = "compile_abort";
  }

  suite.series = cumulative_stats(hops, config.sigma);
  if (!suite.series.empty() && !suite.aborted) suite.verdict = verdict_of(suite.series.back(), 0.99);
  return suite;
}

std::string QuantumVolume::label() const { return below_two() ? "<2" : std::to_string(log2_qv); }

QuantumVolume quantum_volume(const std::map<int, Verdict>& results) {
  if (results.empty()) throw NoDataError("no verdicts to aggregate");
  QuantumVolume qv;
  for (const auto& [m, v] : results)
    if (v.passed) qv.log2_qv = std::max(qv.log2_qv, m);
  for (const auto& [m, v] : results) {
    if (!v.passed && m < qv.log2_qv) {
      qv.warnings.push_back("m=" + std::to_string(m) + " failed below the passing m=" + std::to_string(qv.log2_qv));
    }
  }
  return qv;
}

std::vector<DriftPoint> drift_series(const std::vector<SuiteResult>& suites) {
  if (suites.size() < 2) throw IncompatibleSeriesError("drift series needs at least two suites");
  const auto& ref = suites.front();
  for (const auto& s : suites) {
    if (s.m != ref.m || s.subset != ref.subset || s.profile_name != ref.profile_name) {
      throw IncompatibleSeriesError("suites differ in profile, width or qubit subset");
    }
  }
  std::vector<const SuiteResult*> order;
  for (const auto& s : suites) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(),
                   [](const SuiteResult* a, const SuiteResult* b) { return a->timestamp < b->timestamp; });
  std::vector<DriftPoint> out;
  for (const auto* s : order) {
    DriftPoint p;
    p.timestamp = s->timestamp;
    if (!s->series.empty()) {
      const auto& last = s->series.back();
      p.k = last.k;
      p.mean = last.mean;
      p.mean_minus_2sigma = last.mean - 2.0 * last.sigma;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace qvb
