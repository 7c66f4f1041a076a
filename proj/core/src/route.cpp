#include "qvbench/route.hpp"

#include "qvbench/error.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace qvb {

namespace {

void check_layout(int n_logical, const CouplingGraph& g, const std::vector<int>& layout) {
  if (static_cast<int>(layout.size()) != n_logical) throw LayoutError("layout size does not match circuit width");
  std::set<int> seen;
  for (int p : layout) {
    if (p < 0 || p >= g.n_qubits()) throw LayoutError("layout maps to vertex " + std::to_string(p) + " outside the graph");
    if (!seen.insert(p).second) throw LayoutError("layout is not injective at vertex " + std::to_string(p));
  }
}

}  // namespace

RoutePlan plan_routes(int n_logical, std::span<const std::pair<int, int>> pairs, const CouplingGraph& g,
                      std::vector<int> layout0) {
  check_layout(n_logical, g, layout0);
  const int n_phys = g.n_qubits();
  const auto dist = g.distances();

  // Per-logical-qubit queues of item indices.
  std::vector<std::vector<int>> queue(static_cast<std::size_t>(n_logical));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    if (a < 0 || b < 0 || a >= n_logical || b >= n_logical || a == b) throw LayoutError("invalid qubit pair");
    queue[static_cast<std::size_t>(a)].push_back(static_cast<int>(i));
    queue[static_cast<std::size_t>(b)].push_back(static_cast<int>(i));
  }
  std::vector<std::size_t> head(static_cast<std::size_t>(n_logical), 0);

  RoutePlan plan;
  plan.initial_layout = layout0;
  std::vector<int> layout = std::move(layout0);
  std::vector<int> owner(static_cast<std::size_t>(n_phys), -1);
  for (int l = 0; l < n_logical; ++l) owner[static_cast<std::size_t>(layout[static_cast<std::size_t>(l)])] = l;

  auto d = [&](int pa, int pb) {
    const int v = dist[static_cast<std::size_t>(pa)][static_cast<std::size_t>(pb)];
    if (v < 0) throw LayoutError("qubits " + std::to_string(pa) + " and " + std::to_string(pb) + " are not connected");
    return v;
  };
  auto at_head = [&](int item) {
    const auto [a, b] = pairs[static_cast<std::size_t>(item)];
    const auto& qa = queue[static_cast<std::size_t>(a)];
    const auto& qb = queue[static_cast<std::size_t>(b)];
    const auto ha = head[static_cast<std::size_t>(a)], hb = head[static_cast<std::size_t>(b)];
    return ha < qa.size() && qa[ha] == item && hb < qb.size() && qb[hb] == item;
  };
  auto do_swap = [&](int p, int q) {
    const int lp = owner[static_cast<std::size_t>(p)], lq = owner[static_cast<std::size_t>(q)];
    std::swap(owner[static_cast<std::size_t>(p)], owner[static_cast<std::size_t>(q)]);
    if (lp >= 0) layout[static_cast<std::size_t>(lp)] = q;
    if (lq >= 0) layout[static_cast<std::size_t>(lq)] = p;
    plan.steps.push_back({true, -1, std::min(p, q), std::max(p, q)});
    ++plan.swap_count;
  };

  std::size_t done = 0;
  int stalled = 0;
  while (done < pairs.size()) {
    // Front layer in program order.
    std::vector<int> front;
    for (int l = 0; l < n_logical; ++l) {
      const auto& ql = queue[static_cast<std::size_t>(l)];
      const auto h = head[static_cast<std::size_t>(l)];
      if (h < ql.size() && at_head(ql[h]) && pairs[static_cast<std::size_t>(ql[h])].first == l) front.push_back(ql[h]);
    }
    std::sort(front.begin(), front.end());

    bool executed = false;
    for (int item : front) {
      const auto [a, b] = pairs[static_cast<std::size_t>(item)];
      if (g.has_edge(layout[static_cast<std::size_t>(a)], layout[static_cast<std::size_t>(b)])) {
        plan.steps.push_back({false, item, -1, -1});
        ++head[static_cast<std::size_t>(a)];
        ++head[static_cast<std::size_t>(b)];
        ++done;
        executed = true;
      }
    }
    if (executed) {
      stalled = 0;
      continue;
    }

    // Lookahead: the next item on each qubit of the front.
    std::vector<int> next;
    for (int item : front) {
      for (int l : {pairs[static_cast<std::size_t>(item)].first, pairs[static_cast<std::size_t>(item)].second}) {
        const auto& ql = queue[static_cast<std::size_t>(l)];
        const auto h = head[static_cast<std::size_t>(l)] + 1;
        if (h < ql.size()) next.push_back(ql[h]);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());

    auto pos = [&](int l, int p, int q) {
      const int v = layout[static_cast<std::size_t>(l)];
      return v == p ? q : v == q ? p : v;
    };
    auto score = [&](const std::vector<int>& items, int p, int q) {
      double s = 0;
      for (int item : items) {
        const auto [a, b] = pairs[static_cast<std::size_t>(item)];
        s += d(pos(a, p, q), pos(b, p, q));
      }
      return s;
    };
    const double current = score(front, -1, -1);

    std::set<int> touched;
    for (int item : front) {
      touched.insert(layout[static_cast<std::size_t>(pairs[static_cast<std::size_t>(item)].first)]);
      touched.insert(layout[static_cast<std::size_t>(pairs[static_cast<std::size_t>(item)].second)]);
    }

    int best_p = -1, best_q = -1;
    double best_cost = std::numeric_limits<double>::infinity(), best_front = 0;
    if (stalled <= 2 * n_phys) {
      for (const auto& [p, q] : g.edges()) {
        if (!touched.count(p) && !touched.count(q)) continue;
        const double f = score(front, p, q);
        const double cost = f + 0.5 * score(next, p, q);
        if (cost < best_cost - 1e-12) {
          best_cost = cost;
          best_front = f;
          best_p = p;
          best_q = q;
        }
      }
    }
    if (best_p >= 0 && best_front < current) {
      do_swap(best_p, best_q);
      ++stalled;
      continue;
    }
    // No improving swap: step the earliest front item along a shortest path.
    const auto [a, b] = pairs[static_cast<std::size_t>(front.front())];
    const int pa = layout[static_cast<std::size_t>(a)], pb = layout[static_cast<std::size_t>(b)];
    const int target = d(pa, pb) - 1;
    for (int nb : g.neighbors(pa)) {
      if (d(nb, pb) == target) {
        do_swap(pa, nb);
        break;
      }
    }
    stalled = 2 * n_phys + 1;
  }
  plan.final_layout = layout;
  return plan;
}

RoutedCircuit route(const Circuit& c, const CouplingGraph& g, const std::vector<int>& layout0) {
  const auto& ops = c.ops();
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::size_t> pair_op;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].qubits.size() == 2) {
      pairs.emplace_back(ops[i].qubits[0], ops[i].qubits[1]);
      pair_op.push_back(i);
    }
  }
  // Single-qubit ops preceding each two-qubit op on its qubits, and the tail.
  std::vector<std::vector<std::size_t>> before(pairs.size());
  std::vector<std::vector<std::size_t>> pending(static_cast<std::size_t>(c.width()));
  std::size_t pi = 0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].qubits.size() == 2) {
      for (int q : ops[i].qubits) {
        auto& pq = pending[static_cast<std::size_t>(q)];
        before[pi].insert(before[pi].end(), pq.begin(), pq.end());
        pq.clear();
      }
      ++pi;
    } else {
      for (int q : ops[i].qubits) pending[static_cast<std::size_t>(q)].push_back(i);
    }
  }

  const auto plan = plan_routes(c.width(), pairs, g, layout0);
  RoutedCircuit out{Circuit(g.n_qubits()), plan.initial_layout, plan.final_layout, plan.swap_count};
  std::vector<int> layout = plan.initial_layout;
  std::vector<int> owner(static_cast<std::size_t>(g.n_qubits()), -1);
  for (std::size_t l = 0; l < layout.size(); ++l) owner[static_cast<std::size_t>(layout[l])] = static_cast<int>(l);

  auto mapped = [&](const Operation& op) {
    Operation m = op;
    for (int& q : m.qubits) q = layout[static_cast<std::size_t>(q)];
    return m;
  };
  for (const auto& step : plan.steps) {
    if (step.is_swap) {
      out.circuit.append(GateKind::SWAP, {step.p, step.q});
      const int lp = owner[static_cast<std::size_t>(step.p)], lq = owner[static_cast<std::size_t>(step.q)];
      std::swap(owner[static_cast<std::size_t>(step.p)], owner[static_cast<std::size_t>(step.q)]);
      if (lp >= 0) layout[static_cast<std::size_t>(lp)] = step.q;
      if (lq >= 0) layout[static_cast<std::size_t>(lq)] = step.p;
      continue;
    }
    const auto item = static_cast<std::size_t>(step.item);
    std::sort(before[item].begin(), before[item].end());
    for (auto i : before[item]) out.circuit.append(mapped(ops[i]));
    out.circuit.append(mapped(ops[pair_op[item]]));
  }
  for (auto& tail : pending)
    for (auto i : tail) out.circuit.append(mapped(ops[i]));
  for (int l = 0; l < c.width(); ++l)
    if (c.measured()[static_cast<std::size_t>(l)]) out.circuit.measure(layout[static_cast<std::size_t>(l)]);
  out.circuit.meta() = c.meta();
  out.circuit.meta().layer_boundaries.clear();
  out.circuit.meta().source = CircuitSource::Compiled;
  return out;
}

}  // namespace qvb
