#pragma once

#include "qvbench/protocol.hpp"
#include "qvbench/qvgen.hpp"
#include "qvbench/sim.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace qvb {

inline constexpr int kResultSchemaVersion = 1;
inline constexpr int kCountsSchemaVersion = 1;

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

nlohmann::json suite_to_json(const SuiteResult& s);
/// Throws LoadError on schema mismatch or missing fields.
SuiteResult suite_from_json(const nlohmann::json& j);

/// k,hop,ideal_hop,mean,mean_minus_2sigma,z_conf; one row per scored circuit.
std::string suite_series_csv(const SuiteResult& s);

/// Writes <stem>.json and <stem>.csv.
void save_suite(const std::string& stem, const SuiteResult& s);
SuiteResult load_suite(const std::string& json_path);

nlohmann::json counts_to_json(const Counts& c, std::uint64_t circuit_index);
Counts counts_from_json(const nlohmann::json& j);

/// 64-bit FNV-1a of `bytes`, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Writes qv_m<width>_d<depth>_<index>.qasm for every circuit of the suite plus
/// manifest.json (spec, per-circuit seed/index, file checksums) into `dir`.
/// Returns the manifest.
nlohmann::json write_suite(const QvSpec& spec, const std::string& dir, unsigned workers = 1);

/// Writes `text` verbatim; throws IoError naming the path on failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qvb
