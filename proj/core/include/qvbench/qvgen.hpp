#pragma once

#include "qvbench/circuit.hpp"
#include "qvbench/gates.hpp"
#include "qvbench/rng.hpp"

#include <cstdint>
#include <vector>

namespace qvb {

/// Parameters of a quantum-volume model-circuit suite.
struct QvSpec {
  int width = 2;
  int depth = 2;
  int count = 1000;
  std::uint64_t base_seed = 0;

  /// Square suite (depth == width).
  static QvSpec square(int width, int count, std::uint64_t base_seed);
  /// Throws std::invalid_argument when width < 2, depth < 1 or count < 1.
  void validate() const;
};

/// Haar-random SU(4): Gaussian matrix, QR with phase correction, det -> 1.
Mat4 sample_haar_su4(RngStream& rng);

/// Uniform permutation of {0..width-1} (Fisher-Yates).
std::vector<int> sample_permutation(RngStream& rng, int width);

/// One SU(4) block of the model circuit.
struct QvBlock {
  int layer;
  int qubit_a;
  int qubit_b;
  Mat4 unitary;
};

/// The sampled content of one model circuit before gate emission.
struct QvModel {
  int width;
  std::vector<std::vector<int>> permutations;  // one per layer
  std::vector<QvBlock> blocks;                 // in layer order
};

QvModel sample_qv_model(const QvSpec& spec, std::uint64_t circuit_index);

/// Emits the model as raw U3/CX gates: each block becomes 3 CX and 8 U3.
/// Every qubit is measured and each layer is annotated.
Circuit emit_qv_circuit(const QvModel& model, const QvSpec& spec, std::uint64_t circuit_index);

Circuit generate_qv_circuit(const QvSpec& spec, std::uint64_t circuit_index);

/// Circuits 0..count-1; output does not depend on `workers`.
std::vector<Circuit> generate_suite(const QvSpec& spec, unsigned workers = 1);

}  // namespace qvb
