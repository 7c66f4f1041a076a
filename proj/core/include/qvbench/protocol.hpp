#pragma once

#include "qvbench/stats.hpp"
#include "qvbench/topology.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qvb {

struct ProtocolConfig {
  int max_circuits = 1000;
  std::uint64_t shots = 100;
  std::uint64_t seed = 0;
  double early_stop_conf = 0.99;
  bool stop_on_pass = true;
  bool stop_on_hopeless = true;
  /// Neither early stop fires before this many circuits.
  int min_circuits = 100;
  SigmaFormula sigma = SigmaFormula::Printed;
  bool allow_spill = false;
  int max_retries = 16;
  unsigned workers = 1;
};

struct CircuitResult {
  std::uint64_t circuit_index = 0;
  bool compiled = true;
  std::string error;  // compile failure message
  std::uint64_t heavy_count = 0;
  std::uint64_t shots = 0;
  double hop = 0;
  double ideal_hop = 0;
  int swap_count = 0;
  int two_qubit_count = 0;
  std::vector<int> final_layout;
  std::map<std::uint64_t, std::uint64_t> counts;  // logical bit order
  std::string timestamp;
};

struct SuiteResult {
  int m = 0;
  std::string profile_name;
  std::vector<int> subset;
  ProtocolConfig config;
  std::string timestamp;
  std::vector<CircuitResult> circuits;  // processed circuits, index order
  std::vector<CumulativePoint> series;  // over successfully compiled circuits
  Verdict verdict;
  bool aborted = false;
  std::string stop_reason;  // "pass", "hopeless", "max_circuits", "compile_abort"

  std::vector<double> hops() const;
};

/// Generate -> compile -> sample -> score for width-m square circuits on
/// `subset` (first connected subset when empty). Results do not depend on
/// config.workers. Throws LayoutError/CapacityError for an unusable subset.
SuiteResult run_protocol(int m, const DeviceProfile& profile, std::optional<std::vector<int>> subset,
                         const ProtocolConfig& config);

struct QuantumVolume {
  int log2_qv = 0;  // 0 stands for "< 2"
  std::vector<std::string> warnings;

  bool below_two() const { return log2_qv == 0; }
  std::string label() const;  // "<2" or the log2 value
  std::uint64_t value() const { return below_two() ? 0 : std::uint64_t{1} << log2_qv; }
};

/// Largest m whose verdict passed; warns when a failing m lies below it.
/// Throws NoDataError for an empty map.
QuantumVolume quantum_volume(const std::map<int, Verdict>& results);

struct DriftPoint {
  std::string timestamp;
  std::size_t k = 0;
  double mean = 0;
  double mean_minus_2sigma = 0;
};

/// Chronological (mean, mean - 2 sigma) per suite. Throws
/// IncompatibleSeriesError unless there are >= 2 suites on one (profile, m, subset).
std::vector<DriftPoint> drift_series(const std::vector<SuiteResult>& suites);

/// Current UTC time as ISO-8601.
std::string utc_timestamp();

}  // namespace qvb
