#pragma once

#include "qvbench/gates.hpp"
#include "qvbench/sim.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qvb {

/// Undirected coupling graph; edges are stored as (low, high) pairs, sorted.
class CouplingGraph {
 public:
  CouplingGraph() = default;
  /// Throws std::invalid_argument on self-loops or out-of-range indices.
  CouplingGraph(int n_qubits, std::vector<std::pair<int, int>> edges);

  static CouplingGraph all_to_all(int n);
  static CouplingGraph line(int n);
  static CouplingGraph ring(int n);

  int n_qubits() const noexcept { return n_; }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  bool has_edge(int a, int b) const;
  bool is_connected() const;
  /// True when the induced subgraph on `vertices` is connected (empty: false).
  bool induces_connected(std::span<const int> vertices) const;
  /// All-pairs shortest-path distances (BFS); -1 marks unreachable.
  std::vector<std::vector<int>> distances() const;
  /// Induced subgraph relabelled 0..k-1 in the order of `vertices`.
  CouplingGraph induced(std::span<const int> vertices) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

struct DeviceProfile {
  std::string name;
  CouplingGraph graph;
  GatesetFamily gateset_family = GatesetFamily::SuperconductingHeavyHex;
  NoiseModel noise;
  std::optional<int> vendor_qv;
  std::string provenance;
};

inline constexpr int kProfileSchemaVersion = 1;

/// Throws LoadError listing every offending field.
DeviceProfile profile_from_json(const nlohmann::json& j);
nlohmann::json profile_to_json(const DeviceProfile& p);
DeviceProfile load_profile(const std::string& path);
void save_profile(const std::string& path, const DeviceProfile& p);

/// Names of the profiles reconstructed from published device descriptions.
std::vector<std::string> builtin_profile_names();
/// Throws LoadError for an unknown name.
DeviceProfile builtin_profile(const std::string& name);

/// Every size-n vertex subset whose induced subgraph is connected; each subset
/// ascending, the list in lexicographic order.
std::vector<std::vector<int>> connected_subsets(const CouplingGraph& g, int n);

/// |connected_subsets(g, n)| without materialising the subsets.
std::uint64_t subset_count(const CouplingGraph& g, int n);

/// Lexicographically smallest connected subset of size n, if any.
std::optional<std::vector<int>> first_connected_subset(const CouplingGraph& g, int n);

}  // namespace qvb
