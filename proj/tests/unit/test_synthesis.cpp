#include "qvbench/error.hpp"
#include "qvbench/one_qubit.hpp"
#include "qvbench/qvgen.hpp"
#include "qvbench/two_qubit.hpp"

#include <catch_amalgamated.hpp>

#include <numbers>
#include <random>

using namespace qvb;
using std::numbers::pi;

namespace {

MatX ops_unitary(const std::vector<Operation>& ops, int width) {
  Circuit c(width);
  for (const auto& op : ops) c.append(op);
  return unitary_of(c);
}

const std::vector<GateKind> kTargets = {GateKind::CX, GateKind::CZ, GateKind::ECR,
                                        GateKind::RXX, GateKind::ZZ, GateKind::XY};

}  // namespace

TEST_CASE("KAK decomposition recomposes", "[synthesis]") {
  RngStream rng(4, 0);
  for (int i = 0; i < 200; ++i) {
    const Mat4 u = sample_haar_su4(rng);
    const auto k = kak_decompose(u);
    CHECK((k.compose() - u).cwiseAbs().maxCoeff() < 1e-10);
  }
  const Mat4 bad = 2.0 * Mat4::Identity();
  CHECK_THROWS_AS(kak_decompose(bad), NumericDomainError);
}

TEST_CASE("decompose_su4 templates", "[synthesis]") {
  for (auto target : kTargets) {
    const auto t = decompose_su4(Mat4::Identity(), target);
    CHECK(phase_distance(t.compose(), Mat4::Identity()) < 1e-9);
    for (const auto& e : t.entanglers) CHECK(e.kind == target);
  }
  const Mat4 cx = matrix_2q(GateKind::CX, {});
  const auto via_cz = decompose_su4(cx, GateKind::CZ);
  CHECK(phase_distance(ops_unitary(via_cz.to_ops(0, 1, OneQubitBasis::U3), 2), cx) < 1e-9);
  CHECK_THROWS_AS(decompose_su4(cx, GateKind::SWAP), UnknownTargetError);
  CHECK_THROWS_AS(decompose_su4(Mat4::Zero(), GateKind::CX), NumericDomainError);
}

TEST_CASE("decompose_su4 over Haar samples", "[synthesis]") {
  RngStream rng(8, 0);
  for (auto target : kTargets) {
    double worst = 0;
    for (int i = 0; i < 500; ++i) {
      const Mat4 u = sample_haar_su4(rng);
      const auto t = decompose_su4(u, target);
      worst = std::max(worst, phase_distance(t.compose(), u));
      if (i < 20) {
        // Reversed operands act as the swap-conjugated unitary.
        const Mat4 s = matrix_2q(GateKind::SWAP, {});
        worst = std::max(worst, phase_distance(ops_unitary(t.to_ops(1, 0, OneQubitBasis::U3), 2), s * u * s));
      }
    }
    INFO(gate_info(target).mnemonic);
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("decompose_su4 special gates", "[synthesis]") {
  for (auto target : kTargets) {
    for (auto g : {GateKind::SWAP, GateKind::CX, GateKind::CZ, GateKind::ECR, GateKind::ZZ}) {
      const Mat4 u = matrix_2q(g, {});
      CHECK(phase_distance(decompose_su4(u, target).compose(), u) < 1e-9);
    }
    const Mat4 local = kron(rx_matrix(0.3), ry_matrix(-1.1));
    CHECK(phase_distance(decompose_su4(local, target).compose(), local) < 1e-9);
  }
}

TEST_CASE("single-qubit synthesis per basis", "[synthesis]") {
  const std::map<OneQubitBasis, GateSet> allowed = {
      {OneQubitBasis::U3, {GateKind::U3}},
      {OneQubitBasis::RzSx, {GateKind::RZ, GateKind::SX, GateKind::X}},
      {OneQubitBasis::RzRx, {GateKind::RZ, GateKind::RX}},
      {OneQubitBasis::RxRyRz, {GateKind::RZ, GateKind::RY, GateKind::RX}},
      {OneQubitBasis::U1qRz, {GateKind::RZ, GateKind::U1Q}},
  };
  std::mt19937_64 eng(12);
  std::uniform_real_distribution<double> ang(-pi, pi);
  std::vector<Mat2> cases = {Mat2::Identity(), matrix_1q(GateKind::H, {}), matrix_1q(GateKind::X, {}),
                             matrix_1q(GateKind::SX, {}), rz_matrix(0.4), rx_matrix(pi)};
  for (int i = 0; i < 300; ++i) cases.push_back(u3_matrix(ang(eng), ang(eng), ang(eng)));
  for (const auto& [basis, gates] : allowed) {
    for (const auto& v : cases) {
      const auto ops = synthesize_1q(v, basis);
      for (const auto& op : ops) CHECK(gates.count(op.gate) == 1);
      CHECK(phase_distance(ops_unitary(ops, 1), v) < 1e-10);
    }
    if (basis != OneQubitBasis::U3) CHECK(synthesize_1q(Mat2::Identity(), basis).empty());
  }
  CHECK(synthesize_1q(Mat2::Identity(), OneQubitBasis::U3).size() == 1);
  const auto rzrx = synthesize_1q(cases.back(), GatesetFamily::Octagonal);
  CHECK(rzrx.size() <= 3);
}

TEST_CASE("Euler angles", "[synthesis]") {
  std::mt19937_64 eng(3);
  std::uniform_real_distribution<double> ang(-pi, pi);
  for (int i = 0; i < 200; ++i) {
    const Mat2 v = std::exp(Complex(0, ang(eng))) * u3_matrix(ang(eng), ang(eng), ang(eng));
    const auto e = u3_angles(v);
    const Mat2 back = std::exp(Complex(0, e.phase)) * u3_matrix(e.theta, e.phi, e.lambda);
    CHECK((back - v).cwiseAbs().maxCoeff() < 1e-10);
  }
  CHECK(wrap_angle(3 * pi) == Catch::Approx(pi));
  CHECK(wrap_angle(-pi) == Catch::Approx(pi));
}
