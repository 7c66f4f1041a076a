#include "qvbench/circuit.hpp"

#include "qvbench/error.hpp"

#include <algorithm>

namespace qvb {

std::string_view source_name(CircuitSource source) {
  return source == CircuitSource::Compiled ? "compiled" : "generated";
}

Circuit& Circuit::append(Operation op) {
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::append(GateKind gate, std::vector<int> qubits, std::vector<double> params) {
  return append(Operation{gate, std::move(params), std::move(qubits)});
}

Circuit& Circuit::begin_layer() {
  meta_.layer_boundaries.push_back(ops_.size());
  return *this;
}

Circuit& Circuit::measure(int qubit) {
  measured_.at(static_cast<std::size_t>(qubit)) = true;
  return *this;
}

Circuit& Circuit::measure_all() {
  std::fill(measured_.begin(), measured_.end(), true);
  return *this;
}

std::vector<Violation> validate(const Circuit& c) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < c.ops().size(); ++i) {
    const auto& op = c.ops()[i];
    const auto& info = gate_info(op.gate);
    const std::string name(info.mnemonic);
    if (static_cast<int>(op.qubits.size()) != info.arity) {
      out.push_back({ViolationKind::QubitArity, i,
                     name + " acts on " + std::to_string(info.arity) + " qubit(s), got " +
                         std::to_string(op.qubits.size())});
    }
    if (static_cast<int>(op.params.size()) != info.param_count) {
      out.push_back({ViolationKind::ParameterArity, i,
                     name + " takes " + std::to_string(info.param_count) + " parameter(s), got " +
                         std::to_string(op.params.size())});
    }
    for (std::size_t a = 0; a < op.qubits.size(); ++a) {
      if (op.qubits[a] < 0 || op.qubits[a] >= c.width()) {
        out.push_back({ViolationKind::QubitOutOfRange, i,
                       name + " qubit " + std::to_string(op.qubits[a]) + " outside width " +
                           std::to_string(c.width())});
      }
      for (std::size_t b = a + 1; b < op.qubits.size(); ++b) {
        if (op.qubits[a] == op.qubits[b]) {
          out.push_back({ViolationKind::DuplicateQubit, i,
                         name + " repeats qubit " + std::to_string(op.qubits[a])});
        }
      }
    }
  }
  const auto& lb = c.meta().layer_boundaries;
  if (!lb.empty()) {
    bool ok = lb.front() == 0 && std::is_sorted(lb.begin(), lb.end()) &&
              lb.back() <= c.ops().size() &&
              std::adjacent_find(lb.begin(), lb.end()) == lb.end();
    if (!ok) {
      out.push_back({ViolationKind::LayerBoundary, std::nullopt,
                     "layer boundaries do not partition the op list"});
    }
  }
  return out;
}

MatX embed(const MatX& gate, std::span<const int> qubits, int width) {
  const Eigen::Index dim = Eigen::Index{1} << width;
  MatX out = MatX::Zero(dim, dim);
  const int k = static_cast<int>(qubits.size());
  // Bit position of logical qubit q inside a basis index (qubit 0 is the MSB).
  std::vector<Eigen::Index> masks(static_cast<std::size_t>(k));
  Eigen::Index all = 0;
  for (int j = 0; j < k; ++j) {
    masks[static_cast<std::size_t>(j)] = Eigen::Index{1} << (width - 1 - qubits[static_cast<std::size_t>(j)]);
    all |= masks[static_cast<std::size_t>(j)];
  }
  const int gdim = 1 << k;
  for (Eigen::Index col = 0; col < dim; ++col) {
    int sub_col = 0;
    for (int j = 0; j < k; ++j) sub_col = (sub_col << 1) | ((col & masks[static_cast<std::size_t>(j)]) ? 1 : 0);
    const Eigen::Index rest = col & ~all;
    for (int sub_row = 0; sub_row < gdim; ++sub_row) {
      Eigen::Index row = rest;
      for (int j = 0; j < k; ++j) {
        if ((sub_row >> (k - 1 - j)) & 1) row |= masks[static_cast<std::size_t>(j)];
      }
      out(row, col) = gate(sub_row, sub_col);
    }
  }
  return out;
}

MatX unitary_of(const Circuit& c) {
  if (c.width() > kDenseUnitaryMaxWidth) {
    throw CapacityError("dense unitary limited to " + std::to_string(kDenseUnitaryMaxWidth) +
                        " qubits, circuit has " + std::to_string(c.width()));
  }
  const Eigen::Index dim = Eigen::Index{1} << c.width();
  MatX u = MatX::Identity(dim, dim);
  for (const auto& op : c.ops()) {
    if (op.gate == GateKind::ID || op.gate == GateKind::DELAY) continue;
    u = embed(matrix_of(op.gate, op.params), op.qubits, c.width()) * u;
  }
  return u;
}

GateCensus gate_census(const Circuit& c) {
  GateCensus census;
  std::vector<std::size_t> level(static_cast<std::size_t>(std::max(c.width(), 0)), 0);
  for (const auto& op : c.ops()) {
    if (op.gate == GateKind::DELAY) continue;
    if (op.qubits.size() >= 2) {
      ++census.two_qubit_count;
    } else {
      ++census.one_qubit_count;
    }
    std::size_t start = 0;
    for (int q : op.qubits) start = std::max(start, level[static_cast<std::size_t>(q)]);
    for (int q : op.qubits) level[static_cast<std::size_t>(q)] = start + 1;
    census.depth = std::max(census.depth, start + 1);
  }
  return census;
}

}  // namespace qvb
