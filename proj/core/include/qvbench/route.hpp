#pragma once

#include "qvbench/circuit.hpp"
#include "qvbench/topology.hpp"

#include <span>
#include <utility>
#include <vector>

namespace qvb {

/// One step of a routing schedule: either the next two-qubit item (by index
/// into the input pair list) or a SWAP of two physical vertices.
struct RouteStep {
  bool is_swap = false;
  int item = -1;
  int p = -1;
  int q = -1;
};

struct RoutePlan {
  std::vector<RouteStep> steps;
  std::vector<int> initial_layout;  // logical -> physical
  std::vector<int> final_layout;
  int swap_count = 0;
};

/// Schedules two-qubit interactions `pairs` (logical qubits, in program order)
/// on `g`. Each blocked front layer is resolved by the SWAP minimising the
/// summed front distance plus half the summed distance of the following layer;
/// ties go to the lowest physical pair. Throws LayoutError when the layout is
/// not injective or a needed pair is unreachable.
RoutePlan plan_routes(int n_logical, std::span<const std::pair<int, int>> pairs, const CouplingGraph& g,
                      std::vector<int> layout0);

struct RoutedCircuit {
  Circuit circuit;  // width g.n_qubits(), SWAP ops inserted
  std::vector<int> initial_layout;
  std::vector<int> final_layout;
  int swap_count = 0;
};

/// Maps `c` onto `g` starting from `layout0` (logical -> physical). Single-qubit
/// ops travel with their qubit; measurements land on the final positions.
RoutedCircuit route(const Circuit& c, const CouplingGraph& g, const std::vector<int>& layout0);

}  // namespace qvb
