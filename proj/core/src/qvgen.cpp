#include "qvbench/qvgen.hpp"

#include "qvbench/parallel.hpp"
#include "qvbench/two_qubit.hpp"

#include <stdexcept>
#include <utility>

namespace qvb {

QvSpec QvSpec::square(int width, int count, std::uint64_t base_seed) {
  return QvSpec{width, width, count, base_seed};
}

void QvSpec::validate() const {
  if (width < 2) throw std::invalid_argument("QV width must be >= 2");
  if (depth < 1) throw std::invalid_argument("QV depth must be >= 1");
  if (count < 1) throw std::invalid_argument("QV suite count must be >= 1");
}

Mat4 sample_haar_su4(RngStream& rng) {
  Mat4 g;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = Complex(rng.normal(), rng.normal()) / std::sqrt(2.0);
  Eigen::HouseholderQR<Mat4> qr(g);
  Mat4 q = qr.householderQ();
  const Mat4 r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase freedom of QR so that q is Haar distributed.
  for (int k = 0; k < 4; ++k) {
    const Complex d = r(k, k);
    q.col(k) *= d / std::abs(d);
  }
  return q / std::pow(q.determinant(), 0.25);
}

std::vector<int> sample_permutation(RngStream& rng, int width) {
  std::vector<int> perm(static_cast<std::size_t>(std::max(width, 0)));
  for (int i = 0; i < width; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = width - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
  }
  return perm;
}

QvModel sample_qv_model(const QvSpec& spec, std::uint64_t circuit_index) {
  spec.validate();
  RngStream rng(spec.base_seed, circuit_index, StreamPurpose::Generation);
  QvModel model{spec.width, {}, {}};
  const int pairs = spec.width / 2;
  for (int t = 0; t < spec.depth; ++t) {
    auto perm = sample_permutation(rng, spec.width);
    for (int i = 0; i < pairs; ++i) {
      const auto a = static_cast<std::size_t>(2 * i);
      model.blocks.push_back({t, perm[a], perm[a + 1], sample_haar_su4(rng)});
    }
    model.permutations.push_back(std::move(perm));
  }
  return model;
}

Circuit emit_qv_circuit(const QvModel& model, const QvSpec& spec, std::uint64_t circuit_index) {
  Circuit c(model.width);
  c.meta().seed = spec.base_seed;
  c.meta().circuit_index = circuit_index;
  c.meta().source = CircuitSource::Generated;
  int layer = -1;
  for (const auto& block : model.blocks) {
    if (block.layer != layer) {
      c.begin_layer();
      layer = block.layer;
    }
    const auto tpl = decompose_su4(block.unitary, GateKind::CX);
    for (auto& op : tpl.to_ops(block.qubit_a, block.qubit_b, OneQubitBasis::U3)) c.append(std::move(op));
  }
  c.measure_all();
  return c;
}

Circuit generate_qv_circuit(const QvSpec& spec, std::uint64_t circuit_index) {
  return emit_qv_circuit(sample_qv_model(spec, circuit_index), spec, circuit_index);
}

std::vector<Circuit> generate_suite(const QvSpec& spec, unsigned workers) {
  spec.validate();
  std::vector<Circuit> out(static_cast<std::size_t>(spec.count));
  parallel_for(out.size(), workers, [&](std::size_t i) { out[i] = generate_qv_circuit(spec, i); });
  return out;
}

}  // namespace qvb
