#include "qvbench/one_qubit.hpp"

#include <cmath>
#include <numbers>

namespace qvb {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleEps = 1e-11;

bool negligible(double angle) { return std::abs(wrap_angle(angle)) < kAngleEps; }

void push_rz(std::vector<Operation>& out, double angle, int qubit) {
  if (negligible(angle)) return;
  out.push_back({GateKind::RZ, {wrap_angle(angle)}, {qubit}});
}

}  // namespace

double wrap_angle(double a) {
  a = std::remainder(a, 2 * kPi);
  if (a <= -kPi) a += 2 * kPi;
  return a;
}

OneQubitBasis one_qubit_basis(GatesetFamily family) {
  switch (family) {
    case GatesetFamily::SuperconductingHeavyHex:
    case GatesetFamily::RingEcr:
      return OneQubitBasis::RzSx;
    case GatesetFamily::Octagonal:
      return OneQubitBasis::RzRx;
    case GatesetFamily::IonAllPairsRxx:
      return OneQubitBasis::RxRyRz;
    case GatesetFamily::IonAllPairsZz:
      return OneQubitBasis::U1qRz;
  }
  return OneQubitBasis::U3;
}

EulerAngles u3_angles(const Mat2& v) {
  EulerAngles e;
  const double a = std::abs(v(0, 0));
  const double b = std::abs(v(1, 0));
  e.theta = 2 * std::atan2(b, a);
  if (b < 1e-13) {
    e.phase = std::arg(v(0, 0));
    e.phi = 0;
    e.lambda = std::arg(v(1, 1)) - e.phase;
  } else if (a < 1e-13) {
    e.phase = std::arg(v(1, 0));
    e.phi = 0;
    e.lambda = std::arg(-v(0, 1)) - e.phase;
  } else {
    e.phase = std::arg(v(0, 0));
    e.phi = std::arg(v(1, 0)) - e.phase;
    e.lambda = std::arg(-v(0, 1)) - e.phase;
  }
  e.phi = wrap_angle(e.phi);
  e.lambda = wrap_angle(e.lambda);
  return e;
}

std::vector<Operation> synthesize_1q(const Mat2& v, OneQubitBasis basis, int qubit) {
  const auto e = u3_angles(v);
  std::vector<Operation> out;
  if (basis == OneQubitBasis::U3) {
    out.push_back({GateKind::U3, {e.theta, e.phi, e.lambda}, {qubit}});
    return out;
  }
  if (std::abs(e.theta) < kAngleEps) {
    push_rz(out, e.phi + e.lambda, qubit);
    return out;
  }
  switch (basis) {
    case OneQubitBasis::RzSx:
      if (std::abs(e.theta - kPi) < kAngleEps) {
        out.push_back({GateKind::X, {}, {qubit}});
        push_rz(out, e.phi - e.lambda - kPi, qubit);
        break;
      }
      push_rz(out, e.lambda, qubit);
      out.push_back({GateKind::SX, {}, {qubit}});
      push_rz(out, e.theta + kPi, qubit);
      out.push_back({GateKind::SX, {}, {qubit}});
      push_rz(out, e.phi + kPi, qubit);
      break;
    case OneQubitBasis::RzRx:
      push_rz(out, e.lambda - kPi / 2, qubit);
      out.push_back({GateKind::RX, {e.theta}, {qubit}});
      push_rz(out, e.phi + kPi / 2, qubit);
      break;
    case OneQubitBasis::RxRyRz:
      push_rz(out, e.lambda, qubit);
      out.push_back({GateKind::RY, {e.theta}, {qubit}});
      push_rz(out, e.phi, qubit);
      break;
    case OneQubitBasis::U1qRz:
      push_rz(out, e.phi + e.lambda, qubit);
      out.push_back({GateKind::U1Q, {e.theta, wrap_angle(e.phi + kPi / 2)}, {qubit}});
      break;
    case OneQubitBasis::U3:
      break;
  }
  return out;
}

std::vector<Operation> synthesize_1q(const Mat2& v, GatesetFamily family, int qubit) {
  return synthesize_1q(v, one_qubit_basis(family), qubit);
}

}  // namespace qvb
