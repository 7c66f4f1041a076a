#pragma once

#include "qvbench/circuit.hpp"
#include "qvbench/sim.hpp"
#include "qvbench/topology.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qvb {

/// A two-qubit unitary acting on logical qubits (a, b), matrix in |a b> order.
struct SuBlock {
  int a;
  int b;
  Mat4 unitary;
};

/// A circuit regrouped into maximal two-qubit blocks. Single-qubit gates are
/// folded into the neighbouring block; what follows the last block on a qubit
/// is kept in `tail`.
struct BlockedCircuit {
  int width = 0;
  std::vector<SuBlock> blocks;  // a valid execution order
  std::vector<Mat2> tail;       // per qubit
};

BlockedCircuit extract_blocks(const Circuit& c);

struct CompileRequest {
  Circuit circuit{1};
  DeviceProfile profile;
  std::optional<std::vector<int>> qubit_subset;
  bool allow_spill = false;
  std::uint64_t seed = 0;
  int max_retries = 16;
};

struct CompiledCircuit {
  /// Native gates on local slots 0..k-1; slot s is device qubit physical_qubits[s].
  Circuit circuit{1};
  std::vector<int> physical_qubits;
  std::vector<int> initial_layout;             // logical -> slot
  std::vector<int> final_layout;               // logical -> slot, after routing
  std::vector<std::pair<int, int>> swaps;      // slot pairs, in execution order
  int swap_count = 0;
  GateCensus census;
  int attempts = 1;
};

/// Blocks -> 3-entangler templates -> native single-qubit runs, routed onto the
/// subset (lexicographically first connected subset when none is given).
/// Retries with reshuffled subset orderings while swap_count exceeds
/// width * depth and keeps the best. Throws LayoutError for a bad subset and
/// CapacityError when the device is too small.
CompiledCircuit compile_to_device(const CompileRequest& req);

/// Device-register counts from a compiled circuit, reordered to logical qubits.
Counts remap_counts(const Counts& device_counts, const CompiledCircuit& compiled);

/// Human-readable legality problems: non-native gates, two-qubit ops off the
/// coupling graph. Empty when the circuit is legal.
std::vector<std::string> legality_issues(const CompiledCircuit& compiled, const DeviceProfile& profile);

}  // namespace qvb
