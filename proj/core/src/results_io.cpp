#include "qvbench/results_io.hpp"

#include "qvbench/error.hpp"
#include "qvbench/qasm.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace qvb {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

namespace {

const char* sigma_name(SigmaFormula f) { return f == SigmaFormula::Printed ? "printed" : "binomial"; }

SigmaFormula parse_sigma(const std::string& s) {
  if (s == "printed") return SigmaFormula::Printed;
  if (s == "binomial") return SigmaFormula::Binomial;
  throw LoadError("unknown sigma formula '" + s + "'", {"config.sigma"});
}

nlohmann::json counts_object(const std::map<std::uint64_t, std::uint64_t>& counts, int width) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [x, n] : counts) j[to_bitstring(x, width)] = n;
  return j;
}

}  // namespace

nlohmann::json suite_to_json(const SuiteResult& s) {
  const auto& c = s.config;
  nlohmann::json circuits = nlohmann::json::array();
  for (const auto& r : s.circuits) {
    nlohmann::json jr = {
        {"circuit_index", r.circuit_index},
        {"compiled", r.compiled},
        {"heavy_count", r.heavy_count},
        {"shots", r.shots},
        {"hop", r.hop},
        {"ideal_hop", r.ideal_hop},
        {"swap_count", r.swap_count},
        {"two_qubit_count", r.two_qubit_count},
        {"final_layout", r.final_layout},
        {"counts", counts_object(r.counts, s.m)},
        {"timestamp", r.timestamp},
    };
    if (!r.compiled) jr["error"] = r.error;
    circuits.push_back(std::move(jr));
  }
  nlohmann::json series = nlohmann::json::array();
  for (const auto& p : s.series) {
    series.push_back({{"k", p.k}, {"mean", p.mean}, {"sigma", p.sigma}, {"z", std::isfinite(p.z) ? nlohmann::json(p.z) : nlohmann::json(p.z > 0 ? "inf" : "-inf")}, {"z_conf", p.z_conf}});
  }
  return {
      {"schema", kResultSchemaVersion},
      {"m", s.m},
      {"profile", s.profile_name},
      {"subset", s.subset},
      {"timestamp", s.timestamp},
      {"config",
       {{"max_circuits", c.max_circuits},
        {"shots", c.shots},
        {"seed", c.seed},
        {"early_stop_conf", c.early_stop_conf},
        {"stop_on_pass", c.stop_on_pass},
        {"stop_on_hopeless", c.stop_on_hopeless},
        {"min_circuits", c.min_circuits},
        {"sigma", sigma_name(c.sigma)},
        {"allow_spill", c.allow_spill},
        {"max_retries", c.max_retries}}},
      {"circuits", circuits},
      {"series", series},
      {"verdict",
       {{"criterion1", s.verdict.criterion1},
        {"criterion2", s.verdict.criterion2},
        {"criterion3", s.verdict.criterion3},
        {"passed", s.verdict.passed}}},
      {"aborted", s.aborted},
      {"stop_reason", s.stop_reason},
  };
}

SuiteResult suite_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("schema") || !j["schema"].is_number_integer()) {
    throw LoadError("result file has no schema version", {"schema"});
  }
  if (j["schema"].get<int>() != kResultSchemaVersion) {
    throw LoadError("result schema version " + std::to_string(j["schema"].get<int>()) + " is not supported (expected " +
                        std::to_string(kResultSchemaVersion) + ")",
                    {"schema"});
  }
  try {
    SuiteResult s;
    s.m = j.at("m").get<int>();
    s.profile_name = j.at("profile").get<std::string>();
    s.subset = j.at("subset").get<std::vector<int>>();
    s.timestamp = j.at("timestamp").get<std::string>();
    const auto& c = j.at("config");
    s.config.max_circuits = c.at("max_circuits").get<int>();
    s.config.shots = c.at("shots").get<std::uint64_t>();
    s.config.seed = c.at("seed").get<std::uint64_t>();
    s.config.early_stop_conf = c.at("early_stop_conf").get<double>();
    s.config.stop_on_pass = c.at("stop_on_pass").get<bool>();
    s.config.stop_on_hopeless = c.at("stop_on_hopeless").get<bool>();
    s.config.min_circuits = c.at("min_circuits").get<int>();
    s.config.sigma = parse_sigma(c.at("sigma").get<std::string>());
    s.config.allow_spill = c.at("allow_spill").get<bool>();
    s.config.max_retries = c.at("max_retries").get<int>();
    for (const auto& jr : j.at("circuits")) {
      CircuitResult r;
      r.circuit_index = jr.at("circuit_index").get<std::uint64_t>();
      r.compiled = jr.at("compiled").get<bool>();
      if (jr.contains("error")) r.error = jr["error"].get<std::string>();
      r.heavy_count = jr.at("heavy_count").get<std::uint64_t>();
      r.shots = jr.at("shots").get<std::uint64_t>();
      r.hop = jr.at("hop").get<double>();
      r.ideal_hop = jr.at("ideal_hop").get<double>();
      r.swap_count = jr.at("swap_count").get<int>();
      r.two_qubit_count = jr.at("two_qubit_count").get<int>();
      r.final_layout = jr.at("final_layout").get<std::vector<int>>();
      for (const auto& [bits, n] : jr.at("counts").items()) r.counts[from_bitstring(bits)] = n.get<std::uint64_t>();
      r.timestamp = jr.at("timestamp").get<std::string>();
      s.circuits.push_back(std::move(r));
    }
    s.series = cumulative_stats(s.hops(), s.config.sigma);
    const auto& v = j.at("verdict");
    s.verdict = {v.at("criterion1").get<bool>(), v.at("criterion2").get<bool>(), v.at("criterion3").get<bool>(),
                 v.at("passed").get<bool>()};
    s.aborted = j.at("aborted").get<bool>();
    s.stop_reason = j.at("stop_reason").get<std::string>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(std::string("malformed result file: ") + e.what(), {"<json>"});
  }
}

std::string suite_series_csv(const SuiteResult& s) {
  std::ostringstream out;
  out << "k,hop,ideal_hop,mean,mean_minus_2sigma,z_conf\n";
  std::size_t i = 0;
  for (const auto& r : s.circuits) {
    if (!r.compiled) continue;
    const auto& p = s.series.at(i++);
    out << p.k << ',' << format_double(r.hop) << ',' << format_double(r.ideal_hop) << ',' << format_double(p.mean)
        << ',' << format_double(p.mean - 2.0 * p.sigma) << ',' << format_double(p.z_conf) << '\n';
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

void save_suite(const std::string& stem, const SuiteResult& s) {
  write_text_file(stem + ".json", suite_to_json(s).dump(2) + "\n");
  write_text_file(stem + ".csv", suite_series_csv(s));
}

SuiteResult load_suite(const std::string& json_path) {
  std::ifstream in(json_path);
  if (!in) throw IoError("cannot open " + json_path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError("malformed JSON in " + json_path + ": " + e.what(), {"<json>"});
  }
  return suite_from_json(j);
}

nlohmann::json counts_to_json(const Counts& c, std::uint64_t circuit_index) {
  return {{"schema", kCountsSchemaVersion},
          {"circuit_index", circuit_index},
          {"width", c.width},
          {"shots", c.shots},
          {"counts", counts_object(c.by_index, c.width)}};
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json write_suite(const QvSpec& spec, const std::string& dir, unsigned workers) {
  spec.validate();
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir + ": " + ec.message());
  const auto circuits = generate_suite(spec, workers);
  nlohmann::json files = nlohmann::json::array();
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    char name[64];
    std::snprintf(name, sizeof name, "qv_m%d_d%d_%04zu.qasm", spec.width, spec.depth, i);
    const std::string text = serialize(circuits[i]);
    write_text_file((std::filesystem::path(dir) / name).string(), text);
    files.push_back({{"file", name}, {"circuit_index", i}, {"seed", spec.base_seed}, {"fnv1a64", fnv1a_hex(text)}});
  }
  nlohmann::json manifest = {
      {"schema", 1},
      {"spec", {{"width", spec.width}, {"depth", spec.depth}, {"count", spec.count}, {"base_seed", spec.base_seed}}},
      {"circuits", files},
  };
  write_text_file((std::filesystem::path(dir) / "manifest.json").string(), manifest.dump(2) + "\n");
  return manifest;
}

Counts counts_from_json(const nlohmann::json& j) {
  if (!j.contains("schema") || j["schema"] != kCountsSchemaVersion) throw LoadError("unsupported counts schema", {"schema"});
  Counts c;
  c.width = j.at("width").get<int>();
  c.shots = j.at("shots").get<std::uint64_t>();
  for (const auto& [bits, n] : j.at("counts").items()) c.by_index[from_bitstring(bits)] = n.get<std::uint64_t>();
  return c;
}

}  // namespace qvb
