#pragma once

#include "qvbench/circuit.hpp"
#include "qvbench/gates.hpp"

#include <vector>

namespace qvb {

/// Single-qubit gate vocabularies a synthesised sequence may draw from.
enum class OneQubitBasis : std::uint8_t {
  U3,      // one u3 per unitary, always emitted
  RzSx,    // rz . sx . rz . sx . rz (x used for half turns)
  RzRx,    // rz . rx . rz
  RxRyRz,  // rz . ry . rz
  U1qRz,   // rz then u1q
};

OneQubitBasis one_qubit_basis(GatesetFamily family);

/// v = exp(i*phase) * U3(theta, phi, lambda).
struct EulerAngles {
  double theta = 0;
  double phi = 0;
  double lambda = 0;
  double phase = 0;
};

EulerAngles u3_angles(const Mat2& v);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

/// Gate sequence (in application order) equal to `v` up to global phase.
/// Non-U3 bases drop rotations that are the identity up to phase.
std::vector<Operation> synthesize_1q(const Mat2& v, OneQubitBasis basis, int qubit = 0);
std::vector<Operation> synthesize_1q(const Mat2& v, GatesetFamily family, int qubit = 0);

}  // namespace qvb
