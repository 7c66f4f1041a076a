#pragma once

#include "qvbench/protocol.hpp"
#include "qvbench/topology.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qvb::cli {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitError = 2 };

/// A readable file path, or otherwise the name of a builtin profile.
DeviceProfile resolve_profile(const std::string& path_or_name);

struct GenerateOptions {
  int width = 0;
  int depth = 0;  // 0: square
  int count = 1000;
  std::uint64_t seed = 0;
  std::string outdir = ".";
  unsigned workers = 1;
};
int cmd_generate(const GenerateOptions& o, std::ostream& out, std::ostream& err);

struct EnumerateOptions {
  std::string profile;
  int size = 0;
  bool json = false;
};
int cmd_enumerate(const EnumerateOptions& o, std::ostream& out, std::ostream& err);

struct CompileOptions {
  std::string profile;
  std::string input;
  std::string output;
  std::optional<std::vector<int>> subset;
  bool allow_spill = false;
  std::uint64_t seed = 0;
};
int cmd_compile(const CompileOptions& o, std::ostream& out, std::ostream& err);

struct RunOptions {
  std::string profile;
  int m_min = 0;
  int m_max = 0;
  /// "auto" (first connected subset), "enumerate" (every connected subset),
  /// or an explicit comma-separated vertex list.
  std::string subset = "auto";
  ProtocolConfig protocol;
  std::string outdir = ".";
  bool save_counts = false;
};
int cmd_run(const RunOptions& o, std::ostream& out, std::ostream& err);

struct ReportOptions {
  std::vector<std::string> inputs;
  std::string outdir = ".";
};
int cmd_report(const ReportOptions& o, std::ostream& out, std::ostream& err);

struct QvOptions {
  std::vector<std::string> inputs;
};
int cmd_qv(const QvOptions& o, std::ostream& out, std::ostream& err);

struct ProfilesOptions {
  std::string export_dir;  // empty: list names only
};
int cmd_profiles(const ProfilesOptions& o, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; usage errors return kExitError.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qvb::cli
