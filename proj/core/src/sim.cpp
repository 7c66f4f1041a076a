#include "qvbench/sim.hpp"

#include "qvbench/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace qvb {
namespace {

using namespace std::complex_literals;

// Inverse-CDF draw from a probability vector.
std::uint64_t draw(const std::vector<double>& cdf, double u) {
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u * cdf.back());
  const auto idx = static_cast<std::uint64_t>(it - cdf.begin());
  return std::min<std::uint64_t>(idx, cdf.size() - 1);
}

std::vector<double> cumulative(const std::vector<double>& p) {
  std::vector<double> cdf(p.size());
  double acc = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  return cdf;
}

struct PreparedOp {
  int arity = 0;  // 0: no-op (DELAY/ID)
  Mat2 u1;
  Mat4 u2;
  int qa = 0;
  int qb = 0;
  bool noisy = true;
};

std::vector<PreparedOp> prepare(const Circuit& c) {
  std::vector<PreparedOp> out;
  out.reserve(c.ops().size());
  for (const auto& op : c.ops()) {
    PreparedOp p;
    p.qa = op.qubits.at(0);
    if (op.gate == GateKind::DELAY) {
      p.noisy = false;
    } else if (op.gate == GateKind::ID) {
      p.arity = 0;
    } else if (arity_of(op.gate) == 1) {
      p.arity = 1;
      p.u1 = matrix_1q(op.gate, op.params);
    } else {
      p.arity = 2;
      p.qb = op.qubits.at(1);
      p.u2 = matrix_2q(op.gate, op.params);
    }
    out.push_back(std::move(p));
  }
  return out;
}

void run(StateVector& sv, const PreparedOp& p) {
  if (p.arity == 1) sv.apply_1q(p.u1, p.qa);
  if (p.arity == 2) sv.apply_2q(p.u2, p.qa, p.qb);
}

}  // namespace

std::string to_bitstring(std::uint64_t index, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int q = 0; q < width; ++q) {
    if ((index >> (width - 1 - q)) & 1U) s[static_cast<std::size_t>(q)] = '1';
  }
  return s;
}

std::uint64_t from_bitstring(std::string_view bits) {
  std::uint64_t v = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("bitstring contains '" + std::string(1, ch) + "'");
    v = (v << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return v;
}

StateVector::StateVector(int width) : width_(width) {
  if (width < 1 || width > kStatevectorMaxWidth) {
    throw CapacityError("statevector supports 1.." + std::to_string(kStatevectorMaxWidth) +
                        " qubits, got " + std::to_string(width));
  }
  amps_.assign(std::size_t{1} << width, Complex(0, 0));
  amps_[0] = 1;
}

void StateVector::apply_1q(const Mat2& u, int qubit) {
  const std::uint64_t m = mask(qubit);
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  const std::uint64_t n = amps_.size();
  for (std::uint64_t i = 0; i < n; ++i) {
    if (i & m) continue;
    const Complex a0 = amps_[i], a1 = amps_[i | m];
    amps_[i] = u00 * a0 + u01 * a1;
    amps_[i | m] = u10 * a0 + u11 * a1;
  }
}

void StateVector::apply_2q(const Mat4& u, int qubit_a, int qubit_b) {
  const std::uint64_t ma = mask(qubit_a), mb = mask(qubit_b);
  const std::uint64_t n = amps_.size();
  for (std::uint64_t i = 0; i < n; ++i) {
    if (i & (ma | mb)) continue;
    const std::uint64_t idx[4] = {i, i | mb, i | ma, i | ma | mb};
    Complex v[4];
    for (int k = 0; k < 4; ++k) v[k] = amps_[idx[k]];
    for (int r = 0; r < 4; ++r) {
      amps_[idx[r]] = u(r, 0) * v[0] + u(r, 1) * v[1] + u(r, 2) * v[2] + u(r, 3) * v[3];
    }
  }
}

void StateVector::apply(const Operation& op) {
  if (op.gate == GateKind::DELAY || op.gate == GateKind::ID) return;
  if (arity_of(op.gate) == 1) {
    apply_1q(matrix_1q(op.gate, op.params), op.qubits.at(0));
  } else {
    apply_2q(matrix_2q(op.gate, op.params), op.qubits.at(0), op.qubits.at(1));
  }
}

void StateVector::apply_pauli(int pauli, int qubit) {
  const std::uint64_t m = mask(qubit);
  const std::uint64_t n = amps_.size();
  switch (pauli) {
    case 1:
      for (std::uint64_t i = 0; i < n; ++i)
        if (!(i & m)) std::swap(amps_[i], amps_[i | m]);
      break;
    case 2:
      for (std::uint64_t i = 0; i < n; ++i) {
        if (i & m) continue;
        const Complex a0 = amps_[i], a1 = amps_[i | m];
        amps_[i] = -1i * a1;
        amps_[i | m] = 1i * a0;
      }
      break;
    case 3:
      for (std::uint64_t i = 0; i < n; ++i)
        if (i & m) amps_[i] = -amps_[i];
      break;
    default:
      break;
  }
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
  return p;
}

void NoiseModel::validate() const {
  for (double f : {f2, f1, f_spam}) {
    if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("noise fidelities must lie in [0, 1]");
  }
}

std::map<std::string, std::uint64_t> Counts::by_bitstring() const {
  std::map<std::string, std::uint64_t> out;
  for (const auto& [idx, n] : by_index) out[to_bitstring(idx, width)] = n;
  return out;
}

Distribution ideal_distribution(const Circuit& c) {
  StateVector sv(c.width());
  for (const auto& op : c.ops()) sv.apply(op);
  return {c.width(), sv.probabilities()};
}

HeavySet heavy_set(const Distribution& dist) {
  HeavySet hs;
  hs.width = dist.width;
  std::vector<double> sorted = dist.probs;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  if (n == 0) return hs;
  hs.p_median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  hs.flags.assign(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (dist.probs[x] > hs.p_median) {
      hs.flags[x] = true;
      hs.members.push_back(x);
    }
  }
  return hs;
}

double ideal_hop(const Distribution& dist, const HeavySet& hs) {
  double total = 0;
  for (auto x : hs.members) total += dist.probs.at(x);
  return total;
}

Counts sample_counts(const Circuit& c, std::uint64_t shots, const NoiseModel& noise, RngStream& rng) {
  noise.validate();
  Counts counts;
  counts.width = c.width();
  counts.shots = shots;
  if (shots == 0) return counts;

  const auto ops = prepare(c);
  StateVector ideal(c.width());
  for (const auto& p : ops) run(ideal, p);
  const auto ideal_cdf = cumulative(ideal.probabilities());

  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto& eng = rng.engine();
  const double e1 = 1.0 - noise.f1;
  const double e2 = 1.0 - noise.f2;
  const double e_spam = 1.0 - noise.f_spam;

  struct Fault {
    std::size_t op;
    int pauli;  // 1..3 for one qubit, 1..15 for two qubits
  };
  std::vector<Fault> faults;

  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    std::uint64_t outcome = 0;
    faults.clear();
    if (!noise.gates_noiseless()) {
      for (std::size_t i = 0; i < ops.size(); ++i) {
        const auto& p = ops[i];
        if (!p.noisy) continue;
        const bool two = p.arity == 2;
        const double err = two ? e2 : e1;
        if (unif(eng) < err) {
          const int choices = two ? 15 : 3;
          const int pauli = 1 + static_cast<int>(unif(eng) * choices);
          faults.push_back({i, std::min(pauli, choices)});
        }
      }
    }
    if (faults.empty()) {
      outcome = draw(ideal_cdf, unif(eng));
    } else {
      StateVector sv(c.width());
      std::size_t next = 0;
      for (std::size_t i = 0; i < ops.size(); ++i) {
        run(sv, ops[i]);
        while (next < faults.size() && faults[next].op == i) {
          const auto& p = ops[i];
          if (p.arity == 2) {
            sv.apply_pauli(faults[next].pauli / 4, p.qa);
            sv.apply_pauli(faults[next].pauli % 4, p.qb);
          } else {
            sv.apply_pauli(faults[next].pauli, p.qa);
          }
          ++next;
        }
      }
      outcome = draw(cumulative(sv.probabilities()), unif(eng));
    }
    if (e_spam > 0) {
      for (int q = 0; q < c.width(); ++q) {
        if (unif(eng) < e_spam) outcome ^= std::uint64_t{1} << (c.width() - 1 - q);
      }
    }
    ++counts.by_index[outcome];
  }
  return counts;
}

}  // namespace qvb
