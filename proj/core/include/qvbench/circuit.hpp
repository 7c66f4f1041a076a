#pragma once

#include "qvbench/gates.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qvb {

struct Operation {
  GateKind gate;
  std::vector<double> params;
  std::vector<int> qubits;

  bool operator==(const Operation&) const = default;
};

enum class CircuitSource : std::uint8_t { Generated, Compiled };

std::string_view source_name(CircuitSource source);

struct CircuitMeta {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> circuit_index;
  // Index of the first op of each layer; empty when layers are not annotated.
  std::vector<std::size_t> layer_boundaries;
  CircuitSource source = CircuitSource::Generated;

  bool operator==(const CircuitMeta&) const = default;
};

/// Ordered gate applications on `width` qubits followed by terminal
/// measurements. Qubit 0 is the leftmost character of every bitstring.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int width) : width_(width), measured_(static_cast<std::size_t>(width), false) {}

  int width() const noexcept { return width_; }
  const std::vector<Operation>& ops() const noexcept { return ops_; }
  const std::vector<bool>& measured() const noexcept { return measured_; }
  const CircuitMeta& meta() const noexcept { return meta_; }
  CircuitMeta& meta() noexcept { return meta_; }

  Circuit& append(Operation op);
  Circuit& append(GateKind gate, std::vector<int> qubits, std::vector<double> params = {});
  /// Marks the start of a new layer at the current end of the op list.
  Circuit& begin_layer();
  Circuit& measure(int qubit);
  Circuit& measure_all();

  std::size_t layer_count() const noexcept { return meta_.layer_boundaries.size(); }

  bool operator==(const Circuit&) const = default;

 private:
  int width_ = 0;
  std::vector<Operation> ops_;
  std::vector<bool> measured_;
  CircuitMeta meta_;
};

enum class ViolationKind : std::uint8_t {
  QubitOutOfRange,
  DuplicateQubit,
  QubitArity,
  ParameterArity,
  LayerBoundary,
};

struct Violation {
  ViolationKind kind;
  std::optional<std::size_t> op_index;
  std::string message;
};

/// Reports every invariant violation; an empty result means the circuit is valid.
std::vector<Violation> validate(const Circuit& c);

inline constexpr int kDenseUnitaryMaxWidth = 12;

/// Dense unitary of the gate sequence (measurements ignored). Throws
/// CapacityError above kDenseUnitaryMaxWidth qubits.
MatX unitary_of(const Circuit& c);

/// Embeds a 1- or 2-qubit matrix into a width-qubit operator.
MatX embed(const MatX& gate, std::span<const int> qubits, int width);

struct GateCensus {
  std::size_t two_qubit_count = 0;
  std::size_t one_qubit_count = 0;
  std::size_t depth = 0;

  bool operator==(const GateCensus&) const = default;
};

/// Gate counts by arity and longest dependency chain; DELAY and
/// measurements are not counted.
GateCensus gate_census(const Circuit& c);

}  // namespace qvb
