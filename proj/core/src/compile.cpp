#include "qvbench/compile.hpp"

#include "qvbench/error.hpp"
#include "qvbench/one_qubit.hpp"
#include "qvbench/rng.hpp"
#include "qvbench/route.hpp"
#include "qvbench/two_qubit.hpp"

#include <algorithm>
#include <set>

namespace qvb {

namespace {

const Mat4& swap_matrix() {
  static const Mat4 s = matrix_2q(GateKind::SWAP, {});
  return s;
}

}  // namespace

BlockedCircuit extract_blocks(const Circuit& c) {
  BlockedCircuit out;
  out.width = c.width();
  const auto w = static_cast<std::size_t>(c.width());
  std::vector<Mat2> pending(w, Mat2::Identity());
  std::vector<int> open(w, -1);

  for (const auto& op : c.ops()) {
    if (op.gate == GateKind::ID || op.gate == GateKind::DELAY) continue;
    if (op.qubits.size() == 1) {
      const auto q = static_cast<std::size_t>(op.qubits[0]);
      const Mat2 g = matrix_1q(op.gate, op.params);
      if (open[q] >= 0) {
        auto& blk = out.blocks[static_cast<std::size_t>(open[q])];
        blk.unitary = (blk.a == op.qubits[0] ? kron(g, Mat2::Identity()) : kron(Mat2::Identity(), g)) * blk.unitary;
      } else {
        pending[q] = g * pending[q];
      }
      continue;
    }
    const int a = op.qubits[0], b = op.qubits[1];
    const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    Mat4 g = matrix_2q(op.gate, op.params);
    if (open[ua] >= 0 && open[ua] == open[ub]) {
      auto& blk = out.blocks[static_cast<std::size_t>(open[ua])];
      if (blk.a != a) g = swap_matrix() * g * swap_matrix();
      blk.unitary = g * blk.unitary;
      continue;
    }
    out.blocks.push_back({a, b, g * kron(pending[ua], pending[ub])});
    pending[ua] = Mat2::Identity();
    pending[ub] = Mat2::Identity();
    open[ua] = open[ub] = static_cast<int>(out.blocks.size() - 1);
  }
  out.tail = std::move(pending);
  return out;
}

namespace {

std::vector<int> spill_slots(const CouplingGraph& g, const std::vector<int>& subset) {
  std::set<int> in(subset.begin(), subset.end());
  std::set<int> extra;
  for (int v : subset)
    for (int u : g.neighbors(v))
      if (!in.count(u)) extra.insert(u);
  std::vector<int> slots = subset;
  slots.insert(slots.end(), extra.begin(), extra.end());
  return slots;
}

void check_subset(const CouplingGraph& g, const std::vector<int>& subset, int width, bool allow_spill) {
  if (static_cast<int>(subset.size()) != width) {
    throw LayoutError("qubit subset has " + std::to_string(subset.size()) + " vertices, circuit width is " +
                      std::to_string(width));
  }
  std::set<int> seen;
  for (int v : subset) {
    if (v < 0 || v >= g.n_qubits()) throw LayoutError("subset vertex " + std::to_string(v) + " not on device");
    if (!seen.insert(v).second) throw LayoutError("subset repeats vertex " + std::to_string(v));
  }
  if (!g.induces_connected(subset)) {
    if (!allow_spill) throw LayoutError("qubit subset does not induce a connected subgraph");
    if (!g.induces_connected(spill_slots(g, subset))) {
      throw LayoutError("qubit subset and its neighbours do not induce a connected subgraph");
    }
  }
}

// Emits native gates while merging consecutive single-qubit unitaries per slot.
class NativeEmitter {
 public:
  NativeEmitter(int width, GatesetFamily family)
      : circuit_(width), basis_(one_qubit_basis(family)), pending_(static_cast<std::size_t>(width), Mat2::Identity()) {}

  void apply_template(const TwoQubitTemplate& t, int a, int b) {
    for (std::size_t s = 0; s < 4; ++s) {
      pend(a) = t.first[s] * pend(a);
      pend(b) = t.second[s] * pend(b);
      if (s == 3) break;
      flush(a);
      flush(b);
      circuit_.append(t.entanglers[s].kind, {a, b}, t.entanglers[s].params);
    }
  }
  void apply_1q(const Mat2& u, int q) { pend(q) = u * pend(q); }

  Circuit finish() {
    for (int q = 0; q < circuit_.width(); ++q) flush(q);
    return std::move(circuit_);
  }

 private:
  Mat2& pend(int q) { return pending_[static_cast<std::size_t>(q)]; }
  void flush(int q) {
    for (auto& op : synthesize_1q(pend(q), basis_, q)) circuit_.append(std::move(op));
    pend(q) = Mat2::Identity();
  }

  Circuit circuit_;
  OneQubitBasis basis_;
  std::vector<Mat2> pending_;
};

}  // namespace

CompiledCircuit compile_to_device(const CompileRequest& req) {
  const Circuit& c = req.circuit;
  const CouplingGraph& dev = req.profile.graph;
  const int m = c.width();
  if (m > dev.n_qubits()) {
    throw CapacityError("circuit width " + std::to_string(m) + " exceeds device size " +
                        std::to_string(dev.n_qubits()));
  }
  const GateKind ent = entangler_of(req.profile.gateset_family);
  if (!is_template_target(ent)) throw UnknownTargetError("gateset family has no supported entangler");

  std::vector<int> subset;
  if (req.qubit_subset) {
    subset = *req.qubit_subset;
  } else {
    auto first = first_connected_subset(dev, m);
    if (!first) throw LayoutError("device has no connected subset of size " + std::to_string(m));
    subset = *first;
  }
  check_subset(dev, subset, m, req.allow_spill);

  const BlockedCircuit blocked = extract_blocks(c);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(blocked.blocks.size());
  for (const auto& b : blocked.blocks) pairs.emplace_back(b.a, b.b);

  // Local slots: the subset in the order given (identity layout), then spill
  // neighbours. Retries permute which subset vertex hosts which logical qubit.
  std::vector<int> slots = req.allow_spill ? spill_slots(dev, subset) : subset;
  const CouplingGraph local = dev.induced(slots);

  int depth = static_cast<int>(c.layer_count());
  if (depth == 0 && m > 1) depth = static_cast<int>((2 * blocked.blocks.size() + static_cast<std::size_t>(m) - 1) / static_cast<std::size_t>(m));
  const int threshold = m * std::max(depth, 1);

  std::vector<int> layout(static_cast<std::size_t>(m));
  for (int l = 0; l < m; ++l) layout[static_cast<std::size_t>(l)] = l;
  RoutePlan best = plan_routes(m, pairs, local, layout);
  int attempts = 1;
  for (int r = 1; r <= req.max_retries && best.swap_count > threshold; ++r) {
    RngStream rng(req.seed, static_cast<std::uint64_t>(r), StreamPurpose::Layout);
    for (int i = m - 1; i > 0; --i) {
      const auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1));
      std::swap(layout[static_cast<std::size_t>(i)], layout[j]);
    }
    auto plan = plan_routes(m, pairs, local, layout);
    ++attempts;
    if (plan.swap_count < best.swap_count) best = std::move(plan);
  }

  const auto tmpl_of_swap = decompose_su4(swap_matrix(), ent);
  NativeEmitter emit(local.n_qubits(), req.profile.gateset_family);
  std::vector<int> cur = best.initial_layout;
  CompiledCircuit out;
  for (const auto& step : best.steps) {
    if (step.is_swap) {
      emit.apply_template(tmpl_of_swap, step.p, step.q);
      out.swaps.emplace_back(step.p, step.q);
      for (int& s : cur) s = s == step.p ? step.q : s == step.q ? step.p : s;
      continue;
    }
    const auto& blk = blocked.blocks[static_cast<std::size_t>(step.item)];
    emit.apply_template(decompose_su4(blk.unitary, ent), cur[static_cast<std::size_t>(blk.a)],
                        cur[static_cast<std::size_t>(blk.b)]);
  }
  for (int l = 0; l < m; ++l) emit.apply_1q(blocked.tail[static_cast<std::size_t>(l)], cur[static_cast<std::size_t>(l)]);

  out.circuit = emit.finish();
  // A measured qubit that no gate touches still gets an identity, so it sees gate noise.
  std::vector<bool> touched(static_cast<std::size_t>(out.circuit.width()), false);
  for (const auto& op : out.circuit.ops())
    for (int q : op.qubits) touched[static_cast<std::size_t>(q)] = true;
  for (int l = 0; l < m; ++l) {
    const int slot = cur[static_cast<std::size_t>(l)];
    if (!c.measured()[static_cast<std::size_t>(l)]) continue;
    if (!touched[static_cast<std::size_t>(slot)]) out.circuit.append(GateKind::ID, {slot});
    out.circuit.measure(slot);
  }
  out.circuit.meta().seed = c.meta().seed;
  out.circuit.meta().circuit_index = c.meta().circuit_index;
  out.circuit.meta().source = CircuitSource::Compiled;
  out.physical_qubits = slots;
  out.initial_layout = best.initial_layout;
  out.final_layout = best.final_layout;
  out.swap_count = best.swap_count;
  out.census = gate_census(out.circuit);
  out.attempts = attempts;
  return out;
}

Counts remap_counts(const Counts& device_counts, const CompiledCircuit& compiled) {
  const int m = static_cast<int>(compiled.final_layout.size());
  const int w = device_counts.width;
  Counts out;
  out.width = m;
  out.shots = device_counts.shots;
  for (const auto& [idx, n] : device_counts.by_index) {
    std::uint64_t logical = 0;
    for (int l = 0; l < m; ++l) {
      const int slot = compiled.final_layout[static_cast<std::size_t>(l)];
      const std::uint64_t bit = (idx >> (w - 1 - slot)) & 1U;
      logical |= bit << (m - 1 - l);
    }
    out.by_index[logical] += n;
  }
  return out;
}

std::vector<std::string> legality_issues(const CompiledCircuit& compiled, const DeviceProfile& profile) {
  std::vector<std::string> issues;
  const auto native = native_gateset(profile.gateset_family);
  const auto& ops = compiled.circuit.ops();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const auto& op = ops[i];
    if (!native.count(op.gate) && op.gate != GateKind::ID) {
      issues.push_back("op " + std::to_string(i) + ": " + std::string(gate_info(op.gate).mnemonic) + " is not native");
    }
    if (op.qubits.size() == 2) {
      const int pa = compiled.physical_qubits.at(static_cast<std::size_t>(op.qubits[0]));
      const int pb = compiled.physical_qubits.at(static_cast<std::size_t>(op.qubits[1]));
      if (!profile.graph.has_edge(pa, pb)) {
        issues.push_back("op " + std::to_string(i) + ": (" + std::to_string(pa) + "," + std::to_string(pb) +
                         ") is not a coupling edge");
      }
    }
  }
  for (const auto& v : validate(compiled.circuit)) issues.push_back(v.message);
  return issues;
}

}  // namespace qvb
