#pragma once

#include "qvbench/circuit.hpp"
#include "qvbench/gates.hpp"
#include "qvbench/one_qubit.hpp"

#include <array>
#include <utility>
#include <vector>

namespace qvb {

Mat4 kron(const Mat2& a, const Mat2& b);

/// exp(i (x XX + y YY + z ZZ)).
Mat4 canonical_gate(double x, double y, double z);

/// u = phase * (after_first (x) after_second) * canonical_gate(x, y, z)
///           * (before_first (x) before_second), locals in SU(2).
struct KakDecomposition {
  Mat2 before_first;
  Mat2 before_second;
  Mat2 after_first;
  Mat2 after_second;
  double x = 0;
  double y = 0;
  double z = 0;
  Complex phase{1, 0};

  Mat4 compose() const;
};

/// Cartan decomposition via the magic basis. Throws NumericDomainError when
/// `u` is not unitary.
KakDecomposition kak_decompose(const Mat4& u);

/// Splits a 4x4 tensor product into SU(2) factors: m = phase * (a (x) b).
struct LocalFactors {
  Mat2 first;
  Mat2 second;
  Complex phase;
};
LocalFactors factor_local(const Mat4& m);

struct Entangler {
  GateKind kind;
  std::vector<double> params;
};

/// Fixed synthesis template: four layers of single-qubit unitaries separated
/// by exactly three native two-qubit gates, each applied to (first, second).
/// Slot s acts before entangler s; slot 3 acts last.
struct TwoQubitTemplate {
  std::array<Mat2, 4> first;
  std::array<Mat2, 4> second;
  std::array<Entangler, 3> entanglers;

  Mat4 compose() const;
  /// Expands into gate operations on (qubit_a, qubit_b).
  std::vector<Operation> to_ops(int qubit_a, int qubit_b, OneQubitBasis basis) const;
};

/// True for the two-qubit kinds decompose_su4 can target.
bool is_template_target(GateKind kind);

/// Decomposes a two-qubit unitary into the 3-entangler template for
/// `target_2q` in {CX, CZ, ECR, RXX, ZZ, XY}. The composite equals `u` up to
/// global phase. Throws NumericDomainError for non-unitary input and
/// UnknownTargetError for other target kinds.
TwoQubitTemplate decompose_su4(const Mat4& u, GateKind target_2q);

}  // namespace qvb
