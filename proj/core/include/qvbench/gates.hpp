#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string_view>

namespace qvb {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using MatX = Eigen::MatrixXcd;

// Two-qubit matrices are written in the basis |q_a q_b> where q_a is the
// first listed qubit of the operation and the most significant bit.
enum class GateKind : std::uint8_t {
  XY,
  RXX,
  CPHASE,
  CZ,
  CX,
  ECR,
  ZZ,
  RZ,
  RY,
  RX,
  U1Q,  // U1q2p(theta, phi)
  U3,
  SX,
  X,
  H,
  SWAP,
  ID,
  DELAY,
};

struct GateInfo {
  GateKind kind;
  std::string_view mnemonic;
  int arity;
  int param_count;
};

const GateInfo& gate_info(GateKind kind);
std::span<const GateInfo> all_gates();
std::optional<GateKind> gate_from_mnemonic(std::string_view mnemonic);

inline int arity_of(GateKind kind) { return gate_info(kind).arity; }
inline int param_count_of(GateKind kind) { return gate_info(kind).param_count; }

/// Exact unitary of a gate. Throws ParameterArityError when `params` does not
/// match the gate's parameter count. DELAY and ID are the identity.
MatX matrix_of(GateKind kind, std::span<const double> params);

Mat2 matrix_1q(GateKind kind, std::span<const double> params);
Mat4 matrix_2q(GateKind kind, std::span<const double> params);

// Named single-qubit helpers used throughout synthesis.
Mat2 rz_matrix(double lambda);
Mat2 ry_matrix(double theta);
Mat2 rx_matrix(double theta);
Mat2 u3_matrix(double theta, double phi, double lambda);

enum class GatesetFamily : std::uint8_t {
  SuperconductingHeavyHex,
  Octagonal,
  IonAllPairsRxx,
  IonAllPairsZz,
  RingEcr,
};

std::span<const GatesetFamily> all_gateset_families();
std::string_view family_name(GatesetFamily family);
/// Throws UnknownTargetError for an unrecognised identifier.
GatesetFamily parse_family(std::string_view name);

using GateSet = std::set<GateKind>;

/// Closed set of gates a compiled circuit for `family` may contain.
GateSet native_gateset(GatesetFamily family);
GateSet native_gateset(std::string_view family);
/// Native set plus gates the device accepts on input (octagonal: XY, CPHASE).
GateSet accepted_gateset(GatesetFamily family);
GateKind entangler_of(GatesetFamily family);

/// True when a and b agree up to a global phase within `tol` (max-abs entry).
bool equal_up_to_phase(const MatX& a, const MatX& b, double tol);
double phase_distance(const MatX& a, const MatX& b);
bool is_unitary(const MatX& u, double tol);

}  // namespace qvb
