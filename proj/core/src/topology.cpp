#include "qvbench/topology.hpp"

#include "qvbench/error.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <queue>
#include <stdexcept>

namespace qvb {

CouplingGraph::CouplingGraph(int n_qubits, std::vector<std::pair<int, int>> edges) : n_(n_qubits) {
  if (n_qubits < 0) throw std::invalid_argument("negative qubit count");
  for (auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("self-loop on qubit " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n_qubits || b >= n_qubits) {
      throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") outside " + std::to_string(n_qubits) + " qubits");
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.assign(static_cast<std::size_t>(n_), {});
  for (const auto& [a, b] : edges_) {
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

CouplingGraph CouplingGraph::all_to_all(int n) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return {n, std::move(e)};
}

CouplingGraph CouplingGraph::line(int n) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a + 1 < n; ++a) e.emplace_back(a, a + 1);
  return {n, std::move(e)};
}

CouplingGraph CouplingGraph::ring(int n) {
  auto e = line(n).edges();
  if (n > 2) e.emplace_back(0, n - 1);
  return {n, std::move(e)};
}

bool CouplingGraph::has_edge(int a, int b) const {
  if (a < 0 || a >= n_) return false;
  const auto& nb = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(nb.begin(), nb.end(), b);
}

bool CouplingGraph::is_connected() const {
  std::vector<int> all(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) all[static_cast<std::size_t>(i)] = i;
  return induces_connected(all);
}

bool CouplingGraph::induces_connected(std::span<const int> vertices) const {
  if (vertices.empty()) return false;
  std::vector<char> in(static_cast<std::size_t>(n_), 0), seen(static_cast<std::size_t>(n_), 0);
  for (int v : vertices) {
    if (v < 0 || v >= n_) return false;
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> stack{vertices.front()};
  seen[static_cast<std::size_t>(vertices.front())] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int u : neighbors(v)) {
      if (in[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        stack.push_back(u);
      }
    }
  }
  std::size_t distinct = 0;
  for (char c : in) distinct += static_cast<std::size_t>(c);
  return reached == distinct;
}

std::vector<std::vector<int>> CouplingGraph::distances() const {
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_), -1));
  for (int s = 0; s < n_; ++s) {
    auto& d = dist[static_cast<std::size_t>(s)];
    std::queue<int> q;
    d[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u : neighbors(v)) {
        if (d[static_cast<std::size_t>(u)] < 0) {
          d[static_cast<std::size_t>(u)] = d[static_cast<std::size_t>(v)] + 1;
          q.push(u);
        }
      }
    }
  }
  return dist;
}

CouplingGraph CouplingGraph::induced(std::span<const int> vertices) const {
  std::vector<int> local(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  std::vector<std::pair<int, int>> e;
  for (const auto& [a, b] : edges_) {
    const int la = local[static_cast<std::size_t>(a)], lb = local[static_cast<std::size_t>(b)];
    if (la >= 0 && lb >= 0) e.emplace_back(la, lb);
  }
  return {static_cast<int>(vertices.size()), std::move(e)};
}

// ---------------------------------------------------------------------------
// Profiles

DeviceProfile profile_from_json(const nlohmann::json& j) {
  std::vector<std::string> bad;
  if (!j.is_object()) throw LoadError("profile must be a JSON object", {"<root>"});
  auto need = [&](const char* key, auto pred) {
    if (!j.contains(key) || !pred(j.at(key))) bad.emplace_back(key);
  };
  auto is_int = [](const nlohmann::json& v) { return v.is_number_integer(); };
  auto is_str = [](const nlohmann::json& v) { return v.is_string(); };
  auto is_unit = [](const nlohmann::json& v) {
    return v.is_number() && v.get<double>() >= 0.0 && v.get<double>() <= 1.0;
  };
  need("schema", [](const nlohmann::json& v) { return v.is_number_integer() && v.get<int>() == kProfileSchemaVersion; });
  need("name", is_str);
  need("n_qubits", [](const nlohmann::json& v) { return v.is_number_integer() && v.get<int>() > 0; });
  need("gateset_family", [](const nlohmann::json& v) {
    if (!v.is_string()) return false;
    try {
      parse_family(v.get<std::string>());
      return true;
    } catch (const UnknownTargetError&) {
      return false;
    }
  });
  need("f1", is_unit);
  need("f2", is_unit);
  need("f_spam", is_unit);
  if (j.contains("vendor_qv") && !j.at("vendor_qv").is_null() && !is_int(j.at("vendor_qv"))) {
    bad.emplace_back("vendor_qv");
  }
  std::vector<std::pair<int, int>> edges;
  const int n = j.contains("n_qubits") && is_int(j.at("n_qubits")) ? j.at("n_qubits").get<int>() : 0;
  if (!j.contains("edges") || !j.at("edges").is_array()) {
    bad.emplace_back("edges");
  } else {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !is_int(e[0]) || !is_int(e[1])) {
        bad.emplace_back("edges");
        break;
      }
      const int a = e[0].get<int>(), b = e[1].get<int>();
      if (a == b || a < 0 || b < 0 || a >= n || b >= n) {
        bad.emplace_back("edges");
        break;
      }
      edges.emplace_back(a, b);
    }
  }
  if (!bad.empty()) {
    std::string msg = "invalid profile fields:";
    for (const auto& f : bad) msg += " " + f;
    throw LoadError(msg, bad);
  }
  DeviceProfile p;
  p.name = j.at("name").get<std::string>();
  p.graph = CouplingGraph(n, std::move(edges));
  p.gateset_family = parse_family(j.at("gateset_family").get<std::string>());
  p.noise = {j.at("f2").get<double>(), j.at("f1").get<double>(), j.at("f_spam").get<double>()};
  if (j.contains("vendor_qv") && !j.at("vendor_qv").is_null()) p.vendor_qv = j.at("vendor_qv").get<int>();
  if (j.contains("provenance") && j.at("provenance").is_string()) p.provenance = j.at("provenance").get<std::string>();
  return p;
}

nlohmann::json profile_to_json(const DeviceProfile& p) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : p.graph.edges()) edges.push_back({a, b});
  nlohmann::json j = {
      {"schema", kProfileSchemaVersion},
      {"name", p.name},
      {"n_qubits", p.graph.n_qubits()},
      {"edges", edges},
      {"gateset_family", std::string(family_name(p.gateset_family))},
      {"f1", p.noise.f1},
      {"f2", p.noise.f2},
      {"f_spam", p.noise.f_spam},
      {"vendor_qv", p.vendor_qv ? nlohmann::json(*p.vendor_qv) : nlohmann::json(nullptr)},
  };
  if (!p.provenance.empty()) j["provenance"] = p.provenance;
  return j;
}

DeviceProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open profile " + path, {"<file>"});
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError("malformed JSON in " + path + ": " + e.what(), {"<json>"});
  }
  return profile_from_json(j);
}

void save_profile(const std::string& path, const DeviceProfile& p) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write profile " + path);
  out << profile_to_json(p).dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Connected subset enumeration: each connected set is grown from its minimum
// vertex, extending only through vertices above the root that are not yet
// adjacent to the current set, so every set is produced exactly once.

namespace {

class SubsetEnumerator {
 public:
  SubsetEnumerator(const CouplingGraph& g, int n, std::function<bool(const std::vector<int>&)> visit)
      : g_(g), n_(n), visit_(std::move(visit)), mark_(static_cast<std::size_t>(g.n_qubits()), 0) {}

  // Returns false when the visitor asked to stop.
  bool run_root(int root) {
    root_ = root;
    sub_.clear();
    std::vector<int> ext;
    return add_and_extend(root, ext);
  }

 private:
  bool add_and_extend(int w, const std::vector<int>& ext_in) {
    std::vector<int> ext = ext_in;
    for (int u : g_.neighbors(w)) {
      if (u > root_ && mark_[static_cast<std::size_t>(u)] == 0) ext.push_back(u);
    }
    sub_.push_back(w);
    touch(w, +1);
    const bool keep = extend(std::move(ext));
    touch(w, -1);
    sub_.pop_back();
    return keep;
  }

  bool extend(std::vector<int> ext) {
    if (static_cast<int>(sub_.size()) == n_) return visit_(sub_);
    while (!ext.empty()) {
      const int w = ext.back();
      ext.pop_back();
      if (!add_and_extend(w, ext)) return false;
    }
    return true;
  }

  void touch(int w, int delta) {
    mark_[static_cast<std::size_t>(w)] += delta;
    for (int u : g_.neighbors(w)) mark_[static_cast<std::size_t>(u)] += delta;
  }

  const CouplingGraph& g_;
  int n_;
  std::function<bool(const std::vector<int>&)> visit_;
  std::vector<int> mark_;
  std::vector<int> sub_;
  int root_ = 0;
};

}  // namespace

std::vector<std::vector<int>> connected_subsets(const CouplingGraph& g, int n) {
  std::vector<std::vector<int>> out;
  if (n < 1 || n > g.n_qubits()) return out;
  SubsetEnumerator en(g, n, [&](const std::vector<int>& s) {
    auto sorted = s;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    return true;
  });
  for (int v = 0; v < g.n_qubits(); ++v) en.run_root(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t subset_count(const CouplingGraph& g, int n) {
  std::uint64_t count = 0;
  if (n < 1 || n > g.n_qubits()) return 0;
  SubsetEnumerator en(g, n, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  for (int v = 0; v < g.n_qubits(); ++v) en.run_root(v);
  return count;
}

std::optional<std::vector<int>> first_connected_subset(const CouplingGraph& g, int n) {
  if (n < 1 || n > g.n_qubits()) return std::nullopt;
  for (int v = 0; v < g.n_qubits(); ++v) {
    std::optional<std::vector<int>> best;
    SubsetEnumerator en(g, n, [&](const std::vector<int>& s) {
      auto sorted = s;
      std::sort(sorted.begin(), sorted.end());
      if (!best || sorted < *best) best = std::move(sorted);
      return true;
    });
    en.run_root(v);
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace qvb
