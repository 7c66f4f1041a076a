#pragma once

// Independent reference implementations used only by tests.

#include "qvbench/circuit.hpp"
#include "qvbench/compile.hpp"
#include "qvbench/gates.hpp"
#include "qvbench/topology.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

using qvb::Complex;
using qvb::MatX;

inline MatX kron(const MatX& a, const MatX& b) {
  MatX out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Permutation matrix sending basis |x> to |y>, y bit perm[q] = x bit q
/// (qubit 0 is the most significant bit).
inline MatX qubit_permutation(const std::vector<int>& perm, int width) {
  const std::size_t dim = std::size_t{1} << width;
  MatX p = MatX::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t y = 0;
    for (int q = 0; q < width; ++q) {
      const std::size_t bit = (x >> (width - 1 - q)) & 1U;
      y |= bit << (width - 1 - perm[static_cast<std::size_t>(q)]);
    }
    p(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = 1;
  }
  return p;
}

/// Gate on qubits placed via explicit Kronecker products: the gate is padded
/// with identities on the low qubits, then the qubits are permuted into place.
inline MatX embed(const MatX& gate, const std::vector<int>& qubits, int width) {
  const int k = static_cast<int>(qubits.size());
  MatX full = gate;
  for (int i = k; i < width; ++i) full = kron(full, MatX::Identity(2, 2));
  // Logical position i of the padded operator goes to qubit perm[i].
  std::vector<int> perm(static_cast<std::size_t>(width), -1);
  std::vector<bool> used(static_cast<std::size_t>(width), false);
  for (int i = 0; i < k; ++i) {
    perm[static_cast<std::size_t>(i)] = qubits[static_cast<std::size_t>(i)];
    used[static_cast<std::size_t>(qubits[static_cast<std::size_t>(i)])] = true;
  }
  int next = 0;
  for (int i = k; i < width; ++i) {
    while (used[static_cast<std::size_t>(next)]) ++next;
    perm[static_cast<std::size_t>(i)] = next++;
  }
  const MatX p = qubit_permutation(perm, width);
  return p * full * p.transpose();
}

inline MatX unitary(const qvb::Circuit& c) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << c.width());
  MatX u = MatX::Identity(dim, dim);
  for (const auto& op : c.ops()) u = embed(qvb::matrix_of(op.gate, op.params), op.qubits, c.width()) * u;
  return u;
}

/// Distance between compiled and original unitaries after undoing the layouts:
/// U_compiled * P(initial) == P(final) * (U_original (x) I_spill), compared on
/// inputs whose spill qubits start in |0>.
inline double compiled_distance(const qvb::Circuit& original, const qvb::CompiledCircuit& compiled) {
  const int w = compiled.circuit.width();
  const int m = original.width();
  auto perm_for = [&](const std::vector<int>& layout) {
    std::vector<int> perm(static_cast<std::size_t>(w));
    std::vector<bool> used(static_cast<std::size_t>(w), false);
    for (int l = 0; l < m; ++l) {
      perm[static_cast<std::size_t>(l)] = layout[static_cast<std::size_t>(l)];
      used[static_cast<std::size_t>(layout[static_cast<std::size_t>(l)])] = true;
    }
    int next = 0;
    for (int i = m; i < w; ++i) {
      while (used[static_cast<std::size_t>(next)]) ++next;
      perm[static_cast<std::size_t>(i)] = next++;
    }
    return qubit_permutation(perm, w);
  };
  MatX orig = unitary(original);
  for (int i = m; i < w; ++i) orig = kron(orig, MatX::Identity(2, 2));
  const MatX lhs = unitary(compiled.circuit) * perm_for(compiled.initial_layout);
  const MatX rhs = perm_for(compiled.final_layout) * orig;
  const Eigen::Index cols = Eigen::Index{1} << m;
  MatX l(lhs.rows(), cols), r(rhs.rows(), cols);
  for (Eigen::Index x = 0; x < cols; ++x) {
    l.col(x) = lhs.col(x << (w - m));
    r.col(x) = rhs.col(x << (w - m));
  }
  return qvb::phase_distance(l, r);
}

/// Power-set scan: number of size-n vertex subsets inducing a connected subgraph.
inline std::uint64_t brute_force_subset_count(const qvb::CouplingGraph& g, int n) {
  const int v = g.n_qubits();
  std::uint64_t count = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << v); ++mask) {
    if (__builtin_popcount(mask) != n) continue;
    int start = __builtin_ctz(mask);
    std::uint32_t seen = 1U << start, frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (const auto& [a, b] : g.edges()) {
        const std::uint32_t ba = 1U << a, bb = 1U << b;
        if ((mask & ba) && (mask & bb)) {
          if ((frontier & ba) && !(seen & bb)) next |= bb;
          if ((frontier & bb) && !(seen & ba)) next |= ba;
        }
      }
      seen |= next;
      frontier = next;
    }
    if (seen == mask) ++count;
  }
  return count;
}

using BigFloat = boost::multiprecision::cpp_dec_float_50;

struct PreciseStats {
  BigFloat mean, sigma, z, z_conf;
};

/// mean, printed sigma, z and z_conf evaluated in 50-digit decimal arithmetic.
inline PreciseStats precise_stats(const BigFloat& mean, unsigned k) {
  PreciseStats s;
  s.mean = mean;
  s.sigma = mean * boost::multiprecision::sqrt((BigFloat(1) - mean) / BigFloat(k));
  s.z = (mean - BigFloat(2) / BigFloat(3)) / s.sigma;
  s.z_conf = BigFloat("0.5") * (BigFloat(1) + boost::math::erf(s.z / boost::multiprecision::sqrt(BigFloat(2))));
  return s;
}

/// True when `value` agrees with `reference` to `digits` significant digits.
inline bool same_significant_digits(double value, const BigFloat& reference, int digits) {
  const BigFloat diff = boost::multiprecision::abs(BigFloat(value) - reference);
  const BigFloat scale = boost::multiprecision::abs(reference);
  return diff <= BigFloat("0.5") * boost::multiprecision::pow(BigFloat(10), 1 - digits) * scale;
}

}  // namespace oracle
