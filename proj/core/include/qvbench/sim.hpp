#pragma once

#include "qvbench/circuit.hpp"
#include "qvbench/rng.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qvb {

inline constexpr int kStatevectorMaxWidth = 20;

/// Bitstring for basis index `index`; character 0 is qubit 0 (the MSB).
std::string to_bitstring(std::uint64_t index, int width);
std::uint64_t from_bitstring(std::string_view bits);

class StateVector {
 public:
  /// |0...0> on `width` qubits. Throws CapacityError above kStatevectorMaxWidth.
  explicit StateVector(int width);

  int width() const noexcept { return width_; }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }

  void apply_1q(const Mat2& u, int qubit);
  void apply_2q(const Mat4& u, int qubit_a, int qubit_b);
  void apply(const Operation& op);
  /// pauli: 0 = I, 1 = X, 2 = Y, 3 = Z.
  void apply_pauli(int pauli, int qubit);

  std::vector<double> probabilities() const;

 private:
  std::uint64_t mask(int qubit) const { return std::uint64_t{1} << (width_ - 1 - qubit); }

  int width_;
  std::vector<Complex> amps_;
};

/// Ideal output probabilities p(x) = |<x|U|0>|^2, indexed by basis state.
struct Distribution {
  int width = 0;
  std::vector<double> probs;
};

struct HeavySet {
  int width = 0;
  double p_median = 0;
  std::vector<std::uint64_t> members;  // ascending
  std::vector<bool> flags;             // flags[x] == x is heavy

  bool contains(std::uint64_t x) const { return x < flags.size() && flags[x]; }
};

/// Mean fidelities driving the stochastic-Pauli + readout-flip noise model.
struct NoiseModel {
  double f2 = 1.0;
  double f1 = 1.0;
  double f_spam = 1.0;

  bool gates_noiseless() const { return f1 >= 1.0 && f2 >= 1.0; }
  bool noiseless() const { return gates_noiseless() && f_spam >= 1.0; }
  /// Throws std::invalid_argument when any fidelity is outside [0, 1].
  void validate() const;
};

struct Counts {
  int width = 0;
  std::uint64_t shots = 0;
  std::map<std::uint64_t, std::uint64_t> by_index;

  std::map<std::string, std::uint64_t> by_bitstring() const;
};

Distribution ideal_distribution(const Circuit& c);

/// Bitstrings whose probability is strictly above the median, where the median
/// of the 2^m sorted values is the midpoint of the two central ones.
HeavySet heavy_set(const Distribution& dist);

/// Total ideal probability mass on the heavy set.
double ideal_hop(const Distribution& dist, const HeavySet& hs);

/// Draws `shots` measurement outcomes. Each gate is followed, with probability
/// 1 - f(arity), by a uniformly random non-identity Pauli on its qubits; each
/// readout bit flips with probability 1 - f_spam. A noiseless model samples the
/// ideal distribution directly.
Counts sample_counts(const Circuit& c, std::uint64_t shots, const NoiseModel& noise, RngStream& rng);

}  // namespace qvb
