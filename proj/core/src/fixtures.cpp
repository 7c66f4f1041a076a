#include "qvbench/error.hpp"
#include "qvbench/topology.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace qvb {

namespace {

using Edges = std::vector<std::pair<int, int>>;

void chain(Edges& e, int first, int last) {
  for (int q = first; q < last; ++q) e.emplace_back(q, q + 1);
}

void bridge(Edges& e, int upper, int mid, int lower) {
  e.emplace_back(upper, mid);
  e.emplace_back(mid, lower);
}

Edges falcon16_edges() {
  return {{0, 1},  {1, 2},  {1, 4},  {2, 3},   {3, 5},   {4, 7},   {5, 8},   {6, 7},  {7, 10}, {8, 9},
          {8, 11}, {10, 12}, {11, 14}, {12, 13}, {12, 15}, {13, 14}};
}

Edges falcon27_edges() {
  Edges e = falcon16_edges();
  const Edges extra = {{14, 16}, {15, 18}, {16, 19}, {17, 18}, {18, 21}, {19, 20},
                       {19, 22}, {21, 23}, {22, 25}, {23, 24}, {24, 25}, {25, 26}};
  e.insert(e.end(), extra.begin(), extra.end());
  return e;
}

Edges hummingbird65_edges() {
  Edges e;
  chain(e, 0, 9);
  chain(e, 13, 23);
  chain(e, 27, 37);
  chain(e, 41, 51);
  chain(e, 55, 64);
  const int bridges[][3] = {{0, 10, 13},  {4, 11, 17},  {8, 12, 21},  {15, 24, 29},
                            {19, 25, 33}, {23, 26, 37}, {27, 38, 41}, {31, 39, 45},
                            {35, 40, 49}, {43, 52, 56}, {47, 53, 60}, {51, 54, 64}};
  for (const auto& b : bridges) bridge(e, b[0], b[1], b[2]);
  return e;
}

Edges eagle127_edges() {
  Edges e;
  chain(e, 0, 13);
  chain(e, 18, 32);
  chain(e, 37, 51);
  chain(e, 56, 70);
  chain(e, 75, 89);
  chain(e, 94, 108);
  chain(e, 113, 126);
  const int bridges[][3] = {
      {0, 14, 18},    {4, 15, 22},    {8, 16, 26},    {12, 17, 30},   {20, 33, 39},   {24, 34, 43},
      {28, 35, 47},   {32, 36, 51},   {37, 52, 56},   {41, 53, 60},   {45, 54, 64},   {49, 55, 68},
      {58, 71, 77},   {62, 72, 81},   {66, 73, 85},   {70, 74, 89},   {75, 90, 94},   {79, 91, 98},
      {83, 92, 102},  {87, 93, 106},  {96, 109, 114}, {100, 110, 118}, {104, 111, 122}, {108, 112, 126}};
  for (const auto& b : bridges) bridge(e, b[0], b[1], b[2]);
  // Two inoperable couplers, bringing the lattice to 142 edges.
  const std::pair<int, int> dead[] = {{8, 9}, {109, 114}};
  for (const auto& d : dead) e.erase(std::find(e.begin(), e.end(), d));
  return e;
}

// Octagon lattice: octagon (r, c) owns qubits 8*(r*cols + c) + 0..7 around
// its ring. Positions 1,2 couple to positions 6,5 of the octagon to the
// right; positions 3,4 couple to positions 0,7 of the octagon below.
struct OctagonLattice {
  int rows, cols;
  int q(int r, int c, int pos) const { return 8 * (r * cols + c) + pos; }
  Edges edges() const {
    Edges e;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        for (int p = 0; p < 8; ++p) e.emplace_back(q(r, c, p), q(r, c, (p + 1) % 8));
        if (c + 1 < cols) {
          e.emplace_back(q(r, c, 1), q(r, c + 1, 6));
          e.emplace_back(q(r, c, 2), q(r, c + 1, 5));
        }
        if (r + 1 < rows) {
          e.emplace_back(q(r, c, 3), q(r + 1, c, 0));
          e.emplace_back(q(r, c, 4), q(r + 1, c, 7));
        }
      }
    for (auto& [a, b] : e)
      if (a > b) std::swap(a, b);
    return e;
  }
};

// Drops the listed qubits (and their couplers) and relabels the rest densely.
CouplingGraph without_qubits(int n, const Edges& edges, std::vector<int> dead) {
  std::sort(dead.begin(), dead.end());
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (!std::binary_search(dead.begin(), dead.end(), v)) label[static_cast<std::size_t>(v)] = next++;
  Edges kept;
  for (const auto& [a, b] : edges) {
    const int la = label[static_cast<std::size_t>(a)], lb = label[static_cast<std::size_t>(b)];
    if (la >= 0 && lb >= 0) kept.emplace_back(la, lb);
  }
  return {next, std::move(kept)};
}

DeviceProfile make(std::string name, CouplingGraph g, GatesetFamily fam, double f2, double f1, double spam,
                   std::optional<int> vendor_qv, std::string provenance) {
  DeviceProfile p;
  p.name = std::move(name);
  p.graph = std::move(g);
  p.gateset_family = fam;
  p.noise = {f2, f1, spam};
  p.vendor_qv = vendor_qv;
  p.provenance = std::move(provenance);
  return p;
}

using Factory = std::function<DeviceProfile()>;

const std::map<std::string, Factory>& registry() {
  static const std::map<std::string, Factory> r = {
      {"lima-like",
       [] {
         return make("lima-like", CouplingGraph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}),
                     GatesetFamily::SuperconductingHeavyHex, 0.9898, 0.9998, 0.973, 8,
                     "5q T-shaped heavy-hex fragment; fidelities are 1 - mean published errors");
       }},
      {"bogota-like",
       [] {
         return make("bogota-like", CouplingGraph::line(5), GatesetFamily::SuperconductingHeavyHex, 0.9905,
                     0.9998, 0.9656, 32, "5q linear chain; fidelities are 1 - mean published errors");
       }},
      {"jakarta-like",
       [] {
         return make("jakarta-like", CouplingGraph(7, {{0, 1}, {1, 2}, {1, 3}, {3, 5}, {4, 5}, {5, 6}}),
                     GatesetFamily::SuperconductingHeavyHex, 0.9896, 0.9997, 0.9747, 16,
                     "7q H-shaped heavy-hex fragment; fidelities are 1 - mean published errors");
       }},
      {"guadalupe-like",
       [] {
         return make("guadalupe-like", CouplingGraph(16, falcon16_edges()), GatesetFamily::SuperconductingHeavyHex,
                     0.9892, 0.9997, 0.9738, 32, "16q heavy-hex lattice; fidelities are 1 - mean published errors");
       }},
      {"montreal-like",
       [] {
         return make("montreal-like", CouplingGraph(27, falcon27_edges()), GatesetFamily::SuperconductingHeavyHex,
                     0.9858, 0.9996, 0.9769, 128, "27q heavy-hex lattice; fidelities are 1 - mean published errors");
       }},
      {"brooklyn-like",
       [] {
         return make("brooklyn-like", CouplingGraph(65, hummingbird65_edges()),
                     GatesetFamily::SuperconductingHeavyHex, 0.9118, 0.9995, 0.9694, 32,
                     "65q heavy-hex lattice (72 couplers); fidelities are 1 - mean published errors");
       }},
      {"washington-like",
       [] {
         return make("washington-like", CouplingGraph(127, eagle127_edges()),
                     GatesetFamily::SuperconductingHeavyHex, 0.9828, 0.9997, 0.9737, 64,
                     "127q heavy-hex lattice with couplers (8,9) and (109,114) removed to give 142 couplers; "
                     "the removed pair is a reconstruction");
       }},
      {"lucy-like",
       [] {
         return make("lucy-like", CouplingGraph::ring(8), GatesetFamily::RingEcr, 0.9416, 0.9991, 0.9044,
                     std::nullopt, "8q ring with ECR entangler");
       }},
      {"harmony-like",
       [] {
         return make("harmony-like", CouplingGraph::all_to_all(11), GatesetFamily::IonAllPairsRxx, 0.96541,
                     0.9972, 0.99709, std::nullopt, "11q trapped-ion chain, all pairs coupled, RXX entangler");
       }},
      {"h1-2-like",
       [] {
         return make("h1-2-like", CouplingGraph::all_to_all(12), GatesetFamily::IonAllPairsZz, 0.995, 0.9997,
                     0.993, 4096, "12q trapped-ion trap, all pairs coupled, ZZ entangler");
       }},
      {"aspen-11-like",
       [] {
         const OctagonLattice lat{1, 5};
         // One connector qubit (degree 3) and one ring qubit (degree 2) are dead: 38 qubits, 43 couplers.
         return make("aspen-11-like", without_qubits(40, lat.edges(), {lat.q(0, 0, 1), lat.q(0, 4, 4)}),
                     GatesetFamily::Octagonal, 0.9215, 0.9955, 0.9678, 8,
                     "reconstructed 5-octagon lattice with two dead qubits to match 38q/43 couplers");
       }},
      {"aspen-m-1-like",
       [] {
         const OctagonLattice lat{2, 5};
         Edges e = lat.edges();
         auto drop = [&](int a, int b) {
           if (a > b) std::swap(a, b);
           e.erase(std::find(e.begin(), e.end(), std::pair<int, int>{a, b}));
         };
         drop(lat.q(0, 0, 2), lat.q(0, 1, 5));
         drop(lat.q(1, 2, 2), lat.q(1, 3, 5));
         drop(lat.q(0, 1, 4), lat.q(1, 1, 7));
         drop(lat.q(0, 3, 4), lat.q(1, 3, 7));
         return make("aspen-m-1-like", CouplingGraph(80, std::move(e)), GatesetFamily::Octagonal, 0.9113, 0.9894,
                     0.9695, 8, "reconstructed 2x5-octagon lattice with four dead couplers to match 80q/102 couplers");
       }},
  };
  return r;
}

}  // namespace

std::vector<std::string> builtin_profile_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : registry()) names.push_back(k);
  return names;
}

DeviceProfile builtin_profile(const std::string& name) {
  const auto& r = registry();
  auto it = r.find(name);
  if (it == r.end()) throw LoadError("unknown builtin profile '" + name + "'", {"name"});
  return it->second();
}

}  // namespace qvb
