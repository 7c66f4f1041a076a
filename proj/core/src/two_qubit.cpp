#include "qvbench/two_qubit.hpp"

#include "qvbench/error.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace qvb {
namespace {

using namespace std::complex_literals;
constexpr double kPi = std::numbers::pi;

// Magic basis: local gates become real orthogonal, canonical gates diagonal.
const Mat4& magic() {
  static const Mat4 b = [] {
    Mat4 m;
    const double s = 1.0 / std::numbers::sqrt2;
    m << s, 1i * s, 0, 0,
         0, 0, 1i * s, s,
         0, 0, 1i * s, -s,
         s, -1i * s, 0, 0;
    return m;
  }();
  return b;
}

// Eigenvalues of XX, YY, ZZ on the magic basis columns.
constexpr std::array<double, 4> kXX{1, -1, 1, -1};
constexpr std::array<double, 4> kYY{-1, 1, 1, -1};
constexpr std::array<double, 4> kZZ{1, 1, -1, -1};

Mat2 pauli_x() { return matrix_1q(GateKind::X, {}); }

Mat2 hadamard() { return matrix_1q(GateKind::H, {}); }
Mat2 s_dagger() { return rz_matrix(-kPi / 2); }
Mat2 s_gate() { return rz_matrix(kPi / 2); }

// Single-qubit dressings with CX(0->1) = (pre_first (x) pre_second) * G * (post_first (x) post_second)
// up to global phase, G applied to (0, 1).
struct Dressing {
  Mat2 outer_first, outer_second;  // applied after G
  Mat2 inner_first, inner_second;  // applied before G
};

Dressing cx_dressing(GateKind g) {
  const Mat2 I = Mat2::Identity();
  const Mat2 H = hadamard();
  switch (g) {
    case GateKind::CX: return {I, I, I, I};
    case GateKind::CZ: return {I, H, I, H};
    case GateKind::ZZ: return {I, H, s_dagger(), s_dagger() * H};
    case GateKind::ECR: return {s_gate(), H * s_gate() * H, pauli_x(), I};
    default: throw UnknownTargetError("no CX dressing for " + std::string(gate_info(g).mnemonic));
  }
}

// Time-ordered builder that merges consecutive single-qubit layers.
class TemplateBuilder {
 public:
  TemplateBuilder() {
    tpl_.first.fill(Mat2::Identity());
    tpl_.second.fill(Mat2::Identity());
  }

  void local(const Mat2& first, const Mat2& second) {
    tpl_.first[slot_] = first * tpl_.first[slot_];
    tpl_.second[slot_] = second * tpl_.second[slot_];
  }

  void entangle(Entangler e) {
    tpl_.entanglers.at(slot_) = std::move(e);
    ++slot_;
  }

  TwoQubitTemplate finish() {
    if (slot_ != 3) throw NumericDomainError("template must contain exactly three entanglers");
    return std::move(tpl_);
  }

 private:
  TwoQubitTemplate tpl_;
  std::size_t slot_ = 0;
};

// Emits a CX in the given direction using the target's fixed dressings.
void emit_cx(TemplateBuilder& b, GateKind target, bool reversed) {
  const auto d = cx_dressing(target);
  const Mat2 H = hadamard();
  if (reversed) b.local(H, H);  // CX(1->0) = (H (x) H) CX(0->1) (H (x) H)
  b.local(d.inner_first, d.inner_second);
  b.entangle({target, {}});
  b.local(d.outer_first, d.outer_second);
  if (reversed) b.local(H, H);
}

// canonical_gate(x, y, z) as three CX with single-qubit rotations.
void emit_canonical_cx_class(TemplateBuilder& b, GateKind target, double x, double y, double z) {
  const Mat2 I = Mat2::Identity();
  b.local(rz_matrix(-kPi / 2), I);
  emit_cx(b, target, true);
  b.local(I, ry_matrix(kPi / 2 - 2 * y));
  emit_cx(b, target, false);
  b.local(rz_matrix(kPi / 2 - 2 * z), ry_matrix(2 * x - kPi / 2));
  emit_cx(b, target, true);
  b.local(I, rz_matrix(kPi / 2));
}

// exp(i(x XX + y YY + z ZZ)) = exp(i x XX) exp(i y YY) exp(i z ZZ); each factor
// is an RXX conjugated by a rotation that carries X onto Y or Z.
void emit_canonical_rxx(TemplateBuilder& b, double x, double y, double z) {
  const Mat2 v = rz_matrix(kPi / 2);   // X -> Y
  const Mat2 w = ry_matrix(-kPi / 2);  // X -> Z
  b.entangle({GateKind::RXX, {-2 * x}});
  b.local(v.adjoint(), v.adjoint());
  b.entangle({GateKind::RXX, {-2 * y}});
  b.local(v, v);
  b.local(w.adjoint(), w.adjoint());
  b.entangle({GateKind::RXX, {-2 * z}});
  b.local(w, w);
}

// Same idea with XY(t) = exp(i t/4 (XX + YY)) and pairwise sums of Paulis.
void emit_canonical_xy(TemplateBuilder& b, double x, double y, double z) {
  const double p = (x + y - z) / 2;  // XX + YY
  const double q = (y + z - x) / 2;  // YY + ZZ
  const double r = (x + z - y) / 2;  // XX + ZZ
  const Mat2 h = hadamard();           // X <-> Z, Y -> -Y
  const Mat2 t = rx_matrix(kPi / 2);   // Y -> Z
  b.entangle({GateKind::XY, {4 * p}});
  b.local(h, h);
  b.entangle({GateKind::XY, {4 * q}});
  b.local(h, h);
  b.local(t.adjoint(), t.adjoint());
  b.entangle({GateKind::XY, {4 * r}});
  b.local(t, t);
}

}  // namespace

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Mat4 canonical_gate(double x, double y, double z) {
  Eigen::Vector4cd d;
  for (int k = 0; k < 4; ++k) d(k) = std::exp(1i * (x * kXX[k] + y * kYY[k] + z * kZZ[k]));
  return magic() * d.asDiagonal() * magic().adjoint();
}

Mat4 KakDecomposition::compose() const {
  return phase * kron(after_first, after_second) * canonical_gate(x, y, z) *
         kron(before_first, before_second);
}

LocalFactors factor_local(const Mat4& m) {
  // m[(i,j),(k,l)] = a[i,k] b[j,l]  ->  r[(i,k),(j,l)] is rank one.
  Mat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = m(2 * i + j, 2 * k + l);
  Eigen::JacobiSVD<Mat4> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double s = std::sqrt(svd.singularValues()(0));
  Mat2 a, b;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      a(i, k) = s * svd.matrixU()(2 * i + k, 0);
      b(i, k) = s * std::conj(svd.matrixV()(2 * i + k, 0));
    }
  a /= std::sqrt(a.determinant());
  b /= std::sqrt(b.determinant());
  const Complex overlap = (kron(a, b).adjoint() * m).trace() / 4.0;
  return {a, b, overlap};
}

KakDecomposition kak_decompose(const Mat4& u) {
  if (!is_unitary(u, 1e-8)) throw NumericDomainError("kak_decompose: input is not unitary");

  const Complex root = std::pow(u.determinant(), 0.25);
  const Mat4 su = u / root;
  const Mat4& B = magic();
  const Mat4 ub = B.adjoint() * su * B;
  const Mat4 m = ub.transpose() * ub;

  // Real and imaginary parts of the symmetric unitary m commute, so a generic
  // real combination shares their eigenvectors.
  const Eigen::Matrix4d mr = (m.real() + m.real().transpose()) / 2;
  const Eigen::Matrix4d mi = (m.imag() + m.imag().transpose()) / 2;
  constexpr std::array<double, 6> kMix{0.5772156649015329, 1.4142135623730951, -2.718281828459045,
                                       0.3183098861837907, 7.389056098930650, -0.1234567890123};
  Eigen::Matrix4d p = Eigen::Matrix4d::Identity();
  double best = std::numeric_limits<double>::infinity();
  for (double mix : kMix) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(mr + mix * mi);
    const Eigen::Matrix4d cand = es.eigenvectors();
    const Mat4 d = cand.transpose().cast<Complex>() * m * cand.cast<Complex>();
    double off = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) off = std::max(off, std::abs(d(i, j)));
    if (off < best) {
      best = off;
      p = cand;
    }
    if (off < 1e-13) break;
  }
  if (best > 1e-9) throw NumericDomainError("kak_decompose: failed to diagonalise");
  if (p.determinant() < 0) p.col(0) *= -1;

  const Mat4 pc = p.cast<Complex>();
  const Mat4 d = pc.transpose() * m * pc;
  std::array<double, 4> phi{};
  for (int k = 0; k < 4; ++k) phi[k] = std::arg(d(k, k)) / 2;

  auto left_factor = [&] {
    Eigen::Vector4cd inv;
    for (int k = 0; k < 4; ++k) inv(k) = std::exp(-1i * phi[k]);
    return Mat4(ub * pc * inv.asDiagonal());
  };
  Mat4 k1 = left_factor();
  if (k1.determinant().real() < 0) {
    phi[0] += kPi;
    k1 = left_factor();
  }

  KakDecomposition out;
  double g = 0;
  for (int k = 0; k < 4; ++k) {
    out.x += phi[k] * kXX[k] / 4;
    out.y += phi[k] * kYY[k] / 4;
    out.z += phi[k] * kZZ[k] / 4;
    g += phi[k] / 4;
  }
  const auto left = factor_local(B * k1 * B.adjoint());
  const auto right = factor_local(B * pc.transpose() * B.adjoint());
  out.after_first = left.first;
  out.after_second = left.second;
  out.before_first = right.first;
  out.before_second = right.second;
  out.phase = root * std::exp(1i * g) * left.phase * right.phase;
  return out;
}

Mat4 TwoQubitTemplate::compose() const {
  Mat4 u = kron(first[0], second[0]);
  for (std::size_t s = 0; s < 3; ++s) {
    u = matrix_2q(entanglers[s].kind, entanglers[s].params) * u;
    u = kron(first[s + 1], second[s + 1]) * u;
  }
  return u;
}

std::vector<Operation> TwoQubitTemplate::to_ops(int qubit_a, int qubit_b, OneQubitBasis basis) const {
  std::vector<Operation> ops;
  for (std::size_t s = 0; s < 4; ++s) {
    for (auto& op : synthesize_1q(first[s], basis, qubit_a)) ops.push_back(std::move(op));
    for (auto& op : synthesize_1q(second[s], basis, qubit_b)) ops.push_back(std::move(op));
    if (s < 3) ops.push_back({entanglers[s].kind, entanglers[s].params, {qubit_a, qubit_b}});
  }
  return ops;
}

bool is_template_target(GateKind kind) {
  switch (kind) {
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::ECR:
    case GateKind::RXX:
    case GateKind::ZZ:
    case GateKind::XY:
      return true;
    default:
      return false;
  }
}

TwoQubitTemplate decompose_su4(const Mat4& u, GateKind target_2q) {
  if (!is_template_target(target_2q)) {
    throw UnknownTargetError("decompose_su4: unsupported target '" +
                             std::string(gate_info(target_2q).mnemonic) + "'");
  }
  const auto kak = kak_decompose(u);
  TemplateBuilder b;
  b.local(kak.before_first, kak.before_second);
  switch (target_2q) {
    case GateKind::RXX: emit_canonical_rxx(b, kak.x, kak.y, kak.z); break;
    case GateKind::XY: emit_canonical_xy(b, kak.x, kak.y, kak.z); break;
    default: emit_canonical_cx_class(b, target_2q, kak.x, kak.y, kak.z); break;
  }
  b.local(kak.after_first, kak.after_second);
  return b.finish();
}

}  // namespace qvb
