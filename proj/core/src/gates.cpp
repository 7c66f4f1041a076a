#include "qvbench/gates.hpp"

#include "qvbench/error.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace qvb {
namespace {

using namespace std::complex_literals;

constexpr std::array<GateInfo, 18> kGates{{
    {GateKind::XY, "xy", 2, 1},
    {GateKind::RXX, "rxx", 2, 1},
    {GateKind::CPHASE, "cphase", 2, 1},
    {GateKind::CZ, "cz", 2, 0},
    {GateKind::CX, "cx", 2, 0},
    {GateKind::ECR, "ecr", 2, 0},
    {GateKind::ZZ, "zz", 2, 0},
    {GateKind::RZ, "rz", 1, 1},
    {GateKind::RY, "ry", 1, 1},
    {GateKind::RX, "rx", 1, 1},
    {GateKind::U1Q, "u1q", 1, 2},
    {GateKind::U3, "u3", 1, 3},
    {GateKind::SX, "sx", 1, 0},
    {GateKind::X, "x", 1, 0},
    {GateKind::H, "h", 1, 0},
    {GateKind::SWAP, "swap", 2, 0},
    {GateKind::ID, "id", 1, 0},
    {GateKind::DELAY, "delay", 1, 1},
}};

constexpr std::array<GatesetFamily, 5> kFamilies{
    GatesetFamily::SuperconductingHeavyHex, GatesetFamily::Octagonal,
    GatesetFamily::IonAllPairsRxx, GatesetFamily::IonAllPairsZz,
    GatesetFamily::RingEcr};

void check_params(GateKind kind, std::span<const double> params) {
  const auto& info = gate_info(kind);
  if (static_cast<int>(params.size()) != info.param_count) {
    throw ParameterArityError(std::string(info.mnemonic) + " expects " +
                              std::to_string(info.param_count) + " parameter(s), got " +
                              std::to_string(params.size()));
  }
}

}  // namespace

const GateInfo& gate_info(GateKind kind) {
  return kGates[static_cast<std::size_t>(kind)];
}

std::span<const GateInfo> all_gates() { return kGates; }

std::optional<GateKind> gate_from_mnemonic(std::string_view mnemonic) {
  for (const auto& g : kGates) {
    if (g.mnemonic == mnemonic) return g.kind;
  }
  return std::nullopt;
}

Mat2 rz_matrix(double lambda) {
  Mat2 m = Mat2::Zero();
  m(0, 0) = std::exp(-1i * (lambda / 2));
  m(1, 1) = std::exp(1i * (lambda / 2));
  return m;
}

Mat2 ry_matrix(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Mat2 m;
  m << c, -s, s, c;
  return m;
}

Mat2 rx_matrix(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Mat2 m;
  m << c, -1i * s, -1i * s, c;
  return m;
}

Mat2 u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Mat2 m;
  m << c, -std::exp(1i * lambda) * s, std::exp(1i * phi) * s,
      std::exp(1i * (phi + lambda)) * c;
  return m;
}

Mat2 matrix_1q(GateKind kind, std::span<const double> params) {
  check_params(kind, params);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  Mat2 m;
  switch (kind) {
    case GateKind::RZ: return rz_matrix(params[0]);
    case GateKind::RY: return ry_matrix(params[0]);
    case GateKind::RX: return rx_matrix(params[0]);
    case GateKind::U3: return u3_matrix(params[0], params[1], params[2]);
    case GateKind::U1Q: {
      const double c = std::cos(params[0] / 2), s = std::sin(params[0] / 2);
      const double phi = params[1];
      m << c, -1i * std::exp(-1i * phi) * s, -1i * std::exp(1i * phi) * s, c;
      return m;
    }
    case GateKind::SX:
      // Normalised square root of X; the unscaled form is not unitary.
      m << Complex(0.5, 0.5), Complex(0.5, -0.5), Complex(0.5, -0.5), Complex(0.5, 0.5);
      return m;
    case GateKind::X:
      m << 0, 1, 1, 0;
      return m;
    case GateKind::H:
      m << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
      return m;
    case GateKind::ID:
    case GateKind::DELAY:
      return Mat2::Identity();
    default:
      throw ParameterArityError(std::string(gate_info(kind).mnemonic) +
                                " is not a single-qubit gate");
  }
}

Mat4 matrix_2q(GateKind kind, std::span<const double> params) {
  check_params(kind, params);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  Mat4 m = Mat4::Zero();
  switch (kind) {
    case GateKind::XY: {
      const double c = std::cos(params[0] / 2), s = std::sin(params[0] / 2);
      m(0, 0) = 1;
      m(1, 1) = c;
      m(1, 2) = 1i * s;
      m(2, 1) = 1i * s;
      m(2, 2) = c;
      m(3, 3) = 1;
      return m;
    }
    case GateKind::RXX: {
      const double c = std::cos(params[0] / 2), s = std::sin(params[0] / 2);
      for (int i = 0; i < 4; ++i) {
        m(i, i) = c;
        m(i, 3 - i) = -1i * s;
      }
      return m;
    }
    case GateKind::CPHASE:
      m.diagonal() << 1, 1, 1, std::exp(1i * params[0]);
      return m;
    case GateKind::CZ:
      m.diagonal() << 1, 1, 1, -1;
      return m;
    case GateKind::CX:
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
      return m;
    case GateKind::ECR:
      // Scaled by 1/sqrt(2) so the matrix is unitary.
      m << 0, 0, 1, 1i, 0, 0, 1i, 1, 1, -1i, 0, 0, -1i, 1, 0, 0;
      return m * inv_sqrt2;
    case GateKind::ZZ:
      m.diagonal() << 1, 1i, 1i, 1;
      return m;
    case GateKind::SWAP:
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
      return m;
    default:
      throw ParameterArityError(std::string(gate_info(kind).mnemonic) +
                                " is not a two-qubit gate");
  }
}

MatX matrix_of(GateKind kind, std::span<const double> params) {
  if (arity_of(kind) == 1) return matrix_1q(kind, params);
  return matrix_2q(kind, params);
}

std::span<const GatesetFamily> all_gateset_families() { return kFamilies; }

std::string_view family_name(GatesetFamily family) {
  switch (family) {
    case GatesetFamily::SuperconductingHeavyHex: return "superconducting-heavyhex";
    case GatesetFamily::Octagonal: return "octagonal";
    case GatesetFamily::IonAllPairsRxx: return "ion-allpairs-rxx";
    case GatesetFamily::IonAllPairsZz: return "ion-allpairs-zz";
    case GatesetFamily::RingEcr: return "ring-ecr";
  }
  return "unknown";
}

GatesetFamily parse_family(std::string_view name) {
  for (auto f : kFamilies) {
    if (family_name(f) == name) return f;
  }
  // Short aliases accepted on the command line.
  if (name == "heavyhex") return GatesetFamily::SuperconductingHeavyHex;
  throw UnknownTargetError("unknown gateset family '" + std::string(name) + "'");
}

GateSet native_gateset(GatesetFamily family) {
  using G = GateKind;
  switch (family) {
    case GatesetFamily::SuperconductingHeavyHex: return {G::RZ, G::SX, G::X, G::CX};
    case GatesetFamily::Octagonal: return {G::CZ, G::RZ, G::RX};
    case GatesetFamily::IonAllPairsRxx: return {G::RXX, G::RX, G::RY, G::RZ};
    case GatesetFamily::IonAllPairsZz: return {G::ZZ, G::U1Q, G::RZ};
    case GatesetFamily::RingEcr: return {G::ECR, G::RZ, G::SX, G::X};
  }
  throw UnknownTargetError("unknown gateset family");
}

GateSet native_gateset(std::string_view family) { return native_gateset(parse_family(family)); }

GateSet accepted_gateset(GatesetFamily family) {
  auto set = native_gateset(family);
  if (family == GatesetFamily::Octagonal) {
    set.insert(GateKind::XY);
    set.insert(GateKind::CPHASE);
  }
  return set;
}

GateKind entangler_of(GatesetFamily family) {
  switch (family) {
    case GatesetFamily::SuperconductingHeavyHex: return GateKind::CX;
    case GatesetFamily::Octagonal: return GateKind::CZ;
    case GatesetFamily::IonAllPairsRxx: return GateKind::RXX;
    case GatesetFamily::IonAllPairsZz: return GateKind::ZZ;
    case GatesetFamily::RingEcr: return GateKind::ECR;
  }
  throw UnknownTargetError("unknown gateset family");
}

double phase_distance(const MatX& a, const MatX& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
  Complex overlap = (b.adjoint() * a).trace();
  Complex phase;
  if (std::abs(overlap) > 1e-6) {
    phase = overlap / std::abs(overlap);
  } else {
    Eigen::Index r = 0, c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(b(r, c)) == 0.0 || std::abs(a(r, c)) == 0.0) return (a - b).cwiseAbs().maxCoeff();
    phase = a(r, c) / b(r, c);
    phase /= std::abs(phase);
  }
  return (a - phase * b).cwiseAbs().maxCoeff();
}

bool equal_up_to_phase(const MatX& a, const MatX& b, double tol) {
  return phase_distance(a, b) <= tol;
}

bool is_unitary(const MatX& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const MatX prod = u * u.adjoint();
  return (prod - MatX::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace qvb
