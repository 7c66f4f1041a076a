#include "commands.hpp"

#include "qvbench/compile.hpp"
#include "qvbench/error.hpp"
#include "qvbench/qasm.hpp"
#include "qvbench/results_io.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <filesystem>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace fs = std::filesystem;

namespace qvb::cli {

namespace {

std::string join(const std::vector<int>& v, const char* sep) { return fmt::format("{}", fmt::join(v, sep)); }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("bad qubit list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty qubit list");
  return out;
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir + ": " + ec.message());
}

std::string suite_stem(const SuiteResult& s) { return fmt::format("suite_m{}_q{}", s.m, join(s.subset, "-")); }

}  // namespace

DeviceProfile resolve_profile(const std::string& path_or_name) {
  std::error_code ec;
  if (fs::is_regular_file(path_or_name, ec)) return load_profile(path_or_name);
  const auto names = builtin_profile_names();
  if (std::find(names.begin(), names.end(), path_or_name) != names.end()) return builtin_profile(path_or_name);
  throw LoadError("profile '" + path_or_name + "' is neither a readable file nor a builtin name", {"profile"});
}

int cmd_generate(const GenerateOptions& o, std::ostream& out, std::ostream& err) {
  const int depth = o.depth == 0 ? o.width : o.depth;
  if (o.width < 2 || depth < 1 || o.count < 1) {
    err << "generate: need --width >= 2, --depth >= 1 and --count >= 1\n";
    return kExitError;
  }
  try {
    QvSpec spec{o.width, depth, o.count, o.seed};
    write_suite(spec, o.outdir, o.workers);
    out << fmt::format("wrote {} circuits (m={}, d={}, seed={}) and manifest.json to {}\n", o.count, o.width, depth,
                       o.seed, o.outdir);
    return kExitPass;
  } catch (const std::exception& e) {
    err << "generate: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_enumerate(const EnumerateOptions& o, std::ostream& out, std::ostream& err) {
  try {
    const auto profile = resolve_profile(o.profile);
    if (o.size < 1 || o.size > profile.graph.n_qubits()) {
      err << fmt::format("enumerate: size must lie in [1, {}]\n", profile.graph.n_qubits());
      return kExitError;
    }
    const auto subsets = connected_subsets(profile.graph, o.size);
    if (o.json) {
      nlohmann::json j = {{"profile", profile.name}, {"size", o.size}, {"count", subsets.size()}, {"subsets", subsets}};
      out << j.dump(2) << '\n';
    } else {
      for (const auto& s : subsets) out << join(s, " ") << '\n';
      out << fmt::format("# {} connected subsets of size {} on {}\n", subsets.size(), o.size, profile.name);
    }
    return kExitPass;
  } catch (const std::exception& e) {
    err << "enumerate: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_compile(const CompileOptions& o, std::ostream& out, std::ostream& err) {
  try {
    CompileRequest req;
    req.profile = resolve_profile(o.profile);
    req.circuit = read_circuit_file(o.input);
    req.qubit_subset = o.subset;
    req.allow_spill = o.allow_spill;
    req.seed = o.seed;
    const auto compiled = compile_to_device(req);
    const auto issues = legality_issues(compiled, req.profile);
    for (const auto& i : issues) err << "compile: illegal output: " << i << '\n';
    if (!issues.empty()) return kExitError;

    write_circuit_file(o.output, compiled.circuit);
    nlohmann::json layout = {
        {"schema", 1},
        {"profile", req.profile.name},
        {"physical_qubits", compiled.physical_qubits},
        {"initial_layout", compiled.initial_layout},
        {"final_layout", compiled.final_layout},
        {"swaps", compiled.swaps},
        {"swap_count", compiled.swap_count},
        {"attempts", compiled.attempts},
        {"census",
         {{"two_qubit", compiled.census.two_qubit_count},
          {"one_qubit", compiled.census.one_qubit_count},
          {"depth", compiled.census.depth}}},
    };
    write_text_file(o.output + ".layout.json", layout.dump(2) + "\n");
    out << fmt::format("compiled onto [{}]: {} two-qubit, {} one-qubit, depth {}, {} swaps\n",
                       join(compiled.physical_qubits, ","), compiled.census.two_qubit_count,
                       compiled.census.one_qubit_count, compiled.census.depth, compiled.swap_count);
    return kExitPass;
  } catch (const std::exception& e) {
    err << "compile: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_run(const RunOptions& o, std::ostream& out, std::ostream& err) {
  try {
    const auto profile = resolve_profile(o.profile);
    const int m_max = o.m_max == 0 ? o.m_min : o.m_max;
    if (o.m_min < 2 || m_max < o.m_min || m_max > profile.graph.n_qubits()) {
      err << fmt::format("run: width range must lie in [2, {}]\n", profile.graph.n_qubits());
      return kExitError;
    }
    std::optional<std::vector<int>> explicit_subset;
    if (o.subset != "auto" && o.subset != "enumerate") {
      explicit_subset = parse_int_list(o.subset);
      if (o.m_min != m_max || static_cast<int>(explicit_subset->size()) != o.m_min) {
        err << "run: an explicit subset needs a single width equal to its size\n";
        return kExitError;
      }
    }
    ensure_dir(o.outdir);
    if (o.save_counts) ensure_dir((fs::path(o.outdir) / "counts").string());

    bool any_pass = false, any_abort = false;
    std::map<int, Verdict> per_m;
    for (int m = o.m_min; m <= m_max; ++m) {
      std::vector<std::vector<int>> subsets;
      if (explicit_subset) {
        subsets.push_back(*explicit_subset);
      } else if (o.subset == "enumerate") {
        subsets = connected_subsets(profile.graph, m);
      } else {
        auto first = first_connected_subset(profile.graph, m);
        if (!first) throw LayoutError(fmt::format("no connected subset of size {}", m));
        subsets.push_back(*first);
      }
      Verdict best;
      for (const auto& subset : subsets) {
        const auto suite = run_protocol(m, profile, subset, o.protocol);
        const auto stem = (fs::path(o.outdir) / suite_stem(suite)).string();
        save_suite(stem, suite);
        if (o.save_counts) {
          for (const auto& r : suite.circuits) {
            if (!r.compiled) continue;
            Counts c{m, r.shots, r.counts};
            const auto path = fs::path(o.outdir) / "counts" / fmt::format("{}_{:04}.json", suite_stem(suite), r.circuit_index);
            write_text_file(path.string(), counts_to_json(c, r.circuit_index).dump(2) + "\n");
          }
        }
        if (suite.aborted) {
          any_abort = true;
          err << fmt::format("run: m={} subset [{}] aborted: too many compile failures\n", m, join(subset, ","));
          continue;
        }
        const auto& p = suite.series.back();
        out << fmt::format("m={} subset=[{}] k={} mean={:.4f} mean-2sigma={:.4f} z_conf={:.4f} {} ({})\n", m,
                           join(subset, ","), p.k, p.mean, p.mean - 2 * p.sigma, p.z_conf,
                           suite.verdict.passed ? "PASS" : "FAIL", suite.stop_reason);
        any_pass = any_pass || suite.verdict.passed;
        if (suite.verdict.passed) best = suite.verdict;
      }
      per_m[m] = best;
    }
    if (m_max > o.m_min) {
      const auto qv = quantum_volume(per_m);
      for (const auto& w : qv.warnings) err << "run: warning: " << w << '\n';
      out << fmt::format("log2 QV = {}\n", qv.label());
    }
    if (any_abort) return kExitError;
    return any_pass ? kExitPass : kExitFail;
  } catch (const std::exception& e) {
    err << "run: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_report(const ReportOptions& o, std::ostream& out, std::ostream& err) {
  if (o.inputs.empty()) {
    err << "report: need at least one result file\n";
    return kExitError;
  }
  try {
    std::vector<SuiteResult> suites;
    for (const auto& path : o.inputs) suites.push_back(load_suite(path));
    ensure_dir(o.outdir);
    nlohmann::json report = {{"schema", 1}, {"curves", nlohmann::json::array()}};

    std::set<std::string> used;
    for (std::size_t i = 0; i < suites.size(); ++i) {
      std::string stem = fs::path(o.inputs[i]).stem().string();
      for (int n = 2; used.count(stem); ++n) stem = fmt::format("{}_{}", fs::path(o.inputs[i]).stem().string(), n);
      used.insert(stem);
      const auto name = "cumulative_" + stem + ".csv";
      write_text_file((fs::path(o.outdir) / name).string(), suite_series_csv(suites[i]));
      report["curves"].push_back({{"source", o.inputs[i]}, {"file", name}, {"rows", suites[i].series.size()}});
    }

    // Heatmap: per (profile, qubit), passing suites containing it / suites containing it.
    std::map<std::pair<std::string, int>, std::pair<int, int>> tally;
    std::map<std::pair<std::string, int>, std::pair<int, int>> summary;
    std::map<std::tuple<std::string, int, std::vector<int>>, std::vector<SuiteResult>> groups;
    for (const auto& s : suites) {
      for (int q : s.subset) {
        auto& t = tally[{s.profile_name, q}];
        t.first += s.verdict.passed ? 1 : 0;
        t.second += 1;
      }
      auto& row = summary[{s.profile_name, s.m}];
      row.first += s.verdict.passed ? 1 : 0;
      row.second += 1;
      groups[{s.profile_name, s.m, s.subset}].push_back(s);
    }
    std::string heat = "profile,qubit,passed,total\n";
    report["heatmap"] = nlohmann::json::array();
    for (const auto& [key, t] : tally) {
      heat += fmt::format("{},{},{},{}\n", key.first, key.second, t.first, t.second);
      report["heatmap"].push_back({{"profile", key.first}, {"qubit", key.second}, {"passed", t.first}, {"total", t.second}});
    }
    write_text_file((fs::path(o.outdir) / "heatmap.csv").string(), heat);

    std::string sum = "profile,m,passed,total,label\n";
    report["summary"] = nlohmann::json::array();
    for (const auto& [key, r] : summary) {
      sum += fmt::format("{},{},{},{},{}/{}\n", key.first, key.second, r.first, r.second, r.first, r.second);
      report["summary"].push_back({{"profile", key.first}, {"m", key.second}, {"passed", r.first}, {"total", r.second}});
    }
    write_text_file((fs::path(o.outdir) / "summary.csv").string(), sum);

    std::string drift = "profile,m,subset,timestamp,k,mean,mean_minus_2sigma\n";
    report["drift"] = nlohmann::json::array();
    for (const auto& [key, members] : groups) {
      if (members.size() < 2) continue;
      for (const auto& p : drift_series(members)) {
        drift += fmt::format("{},{},{},{},{},{},{}\n", std::get<0>(key), std::get<1>(key), join(std::get<2>(key), "-"),
                             p.timestamp, p.k, format_double(p.mean), format_double(p.mean_minus_2sigma));
        report["drift"].push_back({{"profile", std::get<0>(key)},
                                   {"m", std::get<1>(key)},
                                   {"subset", std::get<2>(key)},
                                   {"timestamp", p.timestamp},
                                   {"k", p.k},
                                   {"mean", p.mean},
                                   {"mean_minus_2sigma", p.mean_minus_2sigma}});
      }
    }
    write_text_file((fs::path(o.outdir) / "drift.csv").string(), drift);
    write_text_file((fs::path(o.outdir) / "report.json").string(), report.dump(2) + "\n");
    out << fmt::format("report for {} suites written to {}\n", suites.size(), o.outdir);
    return kExitPass;
  } catch (const std::exception& e) {
    err << "report: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_qv(const QvOptions& o, std::ostream& out, std::ostream& err) {
  if (o.inputs.empty()) {
    err << "qv: need at least one result file\n";
    return kExitError;
  }
  try {
    std::map<int, Verdict> per_m;
    std::string profile;
    for (const auto& path : o.inputs) {
      const auto s = load_suite(path);
      if (profile.empty()) profile = s.profile_name;
      if (s.profile_name != profile) {
        err << "qv: result files come from different profiles\n";
        return kExitError;
      }
      auto it = per_m.find(s.m);
      if (it == per_m.end() || (!it->second.passed && s.verdict.passed)) per_m[s.m] = s.verdict;
    }
    const auto qv = quantum_volume(per_m);
    for (const auto& w : qv.warnings) err << "qv: warning: " << w << '\n';
    for (const auto& [m, v] : per_m) out << fmt::format("m={} {}\n", m, v.passed ? "pass" : "fail");
    if (qv.below_two()) {
      out << fmt::format("{}: log2 QV < 2\n", profile);
      return kExitFail;
    }
    out << fmt::format("{}: log2 QV = {} (QV = {})\n", profile, qv.log2_qv, qv.value());
    return kExitPass;
  } catch (const std::exception& e) {
    err << "qv: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_profiles(const ProfilesOptions& o, std::ostream& out, std::ostream& err) {
  try {
    if (!o.export_dir.empty()) ensure_dir(o.export_dir);
    for (const auto& name : builtin_profile_names()) {
      const auto p = builtin_profile(name);
      out << fmt::format("{:<16} {:>3} qubits {:>3} edges  {}\n", name, p.graph.n_qubits(), p.graph.edges().size(),
                         family_name(p.gateset_family));
      if (!o.export_dir.empty()) save_profile((fs::path(o.export_dir) / (name + ".json")).string(), p);
    }
    return kExitPass;
  } catch (const std::exception& e) {
    err << "profiles: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace qvb::cli
